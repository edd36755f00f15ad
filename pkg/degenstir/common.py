#     degenstir - exact degenerate Stirling, Whitney and Carlitz computations
#     Copyright (C) 2024 - degenstir contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#    http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

import os
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Final, Optional
from typing_extensions import TypeAlias

from PySide6.QtCore import QSettings

Rational: TypeAlias = Fraction

ORDER_ENV_VAR: Final = "DEGENSTIR_ORDER"


class ParameterError(ValueError):
    """An index, order or family parameter is out of its domain."""


class OutputFormat(Enum):
    """Supported formats for rendering tables and verification reports."""

    Text = "text", "Plain text"
    Json = "json", "JSON"
    Csv = "csv", "CSV (RFC 4180)"
    _value_: str

    def __new__(cls, *args, **kwds):  # type: ignore
        obj = object.__new__(cls)
        obj._value_ = args[0]  # Use the tag as `_value_`
        return obj

    def __init__(self, _tag: str, display_name: str) -> None:
        self._display_name = display_name

    @property
    def tag(self) -> str:
        """The tag accepted by ``--format``."""
        return self._value_

    @property
    def display_name(self) -> str:
        return self._display_name

    @classmethod
    def from_tag(cls, tag: str) -> OutputFormat:
        for f in cls:
            if f.tag == tag:
                return f
        raise ValueError(f"Unknown output format {tag!r}, expected one of "
                         + ", ".join(f.tag for f in cls))


defaults: Dict[str, Any] = {
    "series/default-order": 12,
    "series/max-order": 32,
    "verify/jobs": 1,
    "output/format": OutputFormat.Text.tag,
    "output/unicode": False,
}

# Initialise settings
settings = QSettings("degenstir", "degenstir")
for key, value in defaults.items():
    if not settings.contains(key):
        settings.setValue(key, value)


def _to_bool(value: object) -> bool:
    # QSettings hands back strings for values read from an ini file
    if isinstance(value, str):
        return value.strip().lower() in ("1", "true", "yes", "on")
    return bool(value)


def _order_from_env(max_order: int) -> Optional[int]:
    raw = os.environ.get(ORDER_ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        order = int(raw)
    except ValueError:
        raise ParameterError(f"{ORDER_ENV_VAR} must be an integer, got {raw!r}")
    if not 0 <= order <= max_order:
        raise ParameterError(f"{ORDER_ENV_VAR}={order} is outside 0..{max_order}")
    return order


class Settings(object):
    DEFAULT_ORDER = 12
    MAX_ORDER = 32
    JOBS = 1
    FORMAT = OutputFormat.Text
    UNICODE = False

    def __init__(self) -> None:
        self.env_error: Optional[str] = None
        self.update()

    def update(self) -> None:
        """Rereads the stored settings and the environment.

        A bad ``DEGENSTIR_ORDER`` leaves the stored default order in place and
        is kept in :attr:`env_error` until :meth:`check_environment` reports it.
        """
        settings = QSettings("degenstir", "degenstir")
        self.MAX_ORDER = int(settings.value("series/max-order", defaults["series/max-order"]))
        self.DEFAULT_ORDER = int(settings.value("series/default-order", defaults["series/default-order"]))
        self.env_error = None
        try:
            env_order = _order_from_env(self.MAX_ORDER)
        except ParameterError as e:
            self.env_error = str(e)
            env_order = None
        if env_order is not None:
            self.DEFAULT_ORDER = env_order
        self.JOBS = max(1, int(settings.value("verify/jobs", defaults["verify/jobs"])))
        self.FORMAT = OutputFormat.from_tag(str(settings.value("output/format", defaults["output/format"])))
        self.UNICODE = _to_bool(settings.value("output/unicode", defaults["output/unicode"]))

    def check_environment(self) -> None:
        if self.env_error is not None:
            raise ParameterError(self.env_error)

    def check_order(self, order: int) -> int:
        """Returns `order` if it is a legal truncation order, raises otherwise."""
        if not 0 <= order <= self.MAX_ORDER:
            raise ParameterError(f"Truncation order {order} is outside 0..{self.MAX_ORDER}")
        return order

setting = Settings()


def check_index(name: str, value: int) -> int:
    if value < 0:
        raise ParameterError(f"{name} must be nonnegative, got {value}")
    return value
