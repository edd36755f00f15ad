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

import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from PySide6.QtCore import QCommandLineOption, QCommandLineParser

from .algebra import parse_rational
from .common import OutputFormat, Rational, setting
from .identities import SUITES, SuiteParams, SuiteReport, run_suite
from .tables import FAMILIES, FamilyParams, build_table, family_value

logger = logging.getLogger(__name__)

COMMANDS = ("table", "eval", "verify")

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad command line; reported with exit code 2."""


@dataclass(frozen=True)
class CliRequest:
    command: str
    family: Optional[str] = None
    identity: Optional[str] = None
    n: Optional[int] = None
    k: Optional[int] = None
    n_max: Optional[int] = None
    k_max: Optional[int] = None
    m: Optional[int] = None
    r: Optional[int] = None
    order_r: Optional[int] = None
    x: Optional[Rational] = None
    lam: Optional[Rational] = None
    fmt: OutputFormat = OutputFormat.Text
    jobs: int = 1
    unicode: bool = False

    def family_params(self) -> FamilyParams:
        return FamilyParams(m=1 if self.m is None else self.m,
                            r=0 if self.r is None else self.r,
                            order_r=1 if self.order_r is None else self.order_r,
                            x=self.x, lam=self.lam)


_INT_OPTIONS = ("n", "k", "n-max", "k-max", "m", "r", "order-r", "jobs")


def _make_parser() -> tuple[QCommandLineParser, QCommandLineOption]:
    parser = QCommandLineParser()
    parser.setApplicationDescription("degenstir - exact degenerate Stirling, Whitney and Carlitz computations")
    help_option = parser.addHelpOption()
    parser.addPositionalArgument("command", "One of: " + ", ".join(COMMANDS) + ".", "<command>")
    families = ", ".join(FAMILIES)
    identities = ", ".join(SUITES)
    options = [
        QCommandLineOption(["family"], f"Family to compute ({families}).", "family"),
        QCommandLineOption(["identity"], f"Identity suite to verify ({identities}).", "identity"),
        QCommandLineOption(["n"], "Index n.", "n"),
        QCommandLineOption(["k"], "Index k.", "k"),
        QCommandLineOption(["n-max"], "Largest n in a table or verification grid.", "N"),
        QCommandLineOption(["k-max"], "Largest k in a table.", "K"),
        QCommandLineOption(["m"], "Whitney parameter m (at least 1).", "m"),
        QCommandLineOption(["r"], "Whitney parameter r (nonnegative).", "r"),
        QCommandLineOption(["order-r"], "Order of the degenerate Euler polynomials.", "r"),
        QCommandLineOption(["x"], "Substitute the rational p/q for x.", "p/q"),
        QCommandLineOption(["lambda"], "Substitute the rational p/q for lambda.", "p/q"),
        QCommandLineOption(["format"], "Output format: "
                           + ", ".join(f"{f.tag} ({f.display_name})" for f in OutputFormat) + ".", "format"),
        QCommandLineOption(["jobs"], "Worker threads for verify.", "N"),
        QCommandLineOption(["unicode"], "Render lambda as the Greek letter."),
        QCommandLineOption(["v", "verbose"], "More logging on stderr; repeat for debug output."),
    ]
    for option in options:
        parser.addOption(option)
    return parser, help_option


def _int_value(parser: QCommandLineParser, name: str) -> Optional[int]:
    if not parser.isSet(name):
        return None
    raw = parser.value(name)
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"--{name} expects an integer, got {raw!r}")


def _rational_value(parser: QCommandLineParser, name: str) -> Optional[Rational]:
    if not parser.isSet(name):
        return None
    try:
        return parse_rational(parser.value(name))
    except ValueError as e:
        raise UsageError(f"--{name}: {e}")


def parse_request(parser: QCommandLineParser) -> CliRequest:
    positional = parser.positionalArguments()
    if len(positional) != 1 or positional[0] not in COMMANDS:
        raise UsageError("Expected exactly one command: " + " | ".join(COMMANDS))
    ints = {name: _int_value(parser, name) for name in _INT_OPTIONS}
    for name in ("n", "k", "n-max", "k-max", "r"):
        value = ints[name]
        if value is not None and value < 0:
            raise UsageError(f"--{name} must be nonnegative, got {value}")
    for name in ("m", "order-r", "jobs"):
        value = ints[name]
        if value is not None and value < 1:
            raise UsageError(f"--{name} must be at least 1, got {value}")
    fmt = setting.FORMAT
    if parser.isSet("format"):
        try:
            fmt = OutputFormat.from_tag(parser.value("format"))
        except ValueError as e:
            raise UsageError(str(e))
    jobs = ints["jobs"]
    return CliRequest(
        command=positional[0],
        family=parser.value("family") if parser.isSet("family") else None,
        identity=parser.value("identity") if parser.isSet("identity") else None,
        n=ints["n"], k=ints["k"], n_max=ints["n-max"], k_max=ints["k-max"],
        m=ints["m"], r=ints["r"], order_r=ints["order-r"],
        x=_rational_value(parser, "x"), lam=_rational_value(parser, "lambda"),
        fmt=fmt,
        jobs=setting.JOBS if jobs is None else jobs,
        unicode=setting.UNICODE or parser.isSet("unicode"),
    )


def _require_family(request: CliRequest) -> str:
    if request.family is None:
        raise UsageError(f"{request.command} needs --family")
    if request.family not in FAMILIES:
        raise UsageError(f"Unknown family {request.family!r}, expected one of " + ", ".join(FAMILIES))
    return request.family


def cmd_table(request: CliRequest, out: TextIO) -> int:
    family = _require_family(request)
    n_max = setting.DEFAULT_ORDER if request.n_max is None else request.n_max
    table = build_table(family, n_max, request.k_max, request.family_params(), request.unicode)
    out.write(table.render(request.fmt))
    return EXIT_OK


def cmd_eval(request: CliRequest, out: TextIO) -> int:
    family = _require_family(request)
    if request.n is None:
        raise UsageError("eval needs --n")
    if FAMILIES[family]["triangular"] and request.k is None:
        raise UsageError(f"eval of {family} needs --k")
    value = family_value(family, request.n, request.k, request.family_params()).render(request.unicode)
    if request.fmt is OutputFormat.Json:
        out.write(json.dumps({"family": family, "n": request.n, "k": request.k, "value": value},
                             ensure_ascii=False) + "\n")
    else:
        out.write(value + "\n")
    return EXIT_OK


def render_report(report: SuiteReport, fmt: OutputFormat, unicode: bool = False) -> str:
    if fmt is OutputFormat.Json:
        failure = report.first_failure
        return json.dumps({
            "identity": report.identity,
            "n_max": report.n_max,
            "cells": [{"indices": dict(c.indices), "passed": c.passed} for c in report.cells],
            "summary": report.summary,
            "first_failure": None if failure is None else failure.describe(unicode),
        }, ensure_ascii=False) + "\n"
    if fmt is OutputFormat.Csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["cell", "result"])
        for c in report.cells:
            writer.writerow([c.index_text(), "ok" if c.passed else "FAIL"])
        return buf.getvalue()
    lines = [f"{'ok' if c.passed else 'FAIL'} {c.index_text()}" for c in report.cells]
    if report.first_failure is not None:
        lines.append("first failure: " + report.first_failure.describe(unicode))
    lines.append(report.summary)
    return "\n".join(lines) + "\n"


def cmd_verify(request: CliRequest, out: TextIO) -> int:
    if request.identity is None:
        raise UsageError("verify needs --identity")
    if request.identity not in SUITES:
        raise UsageError(f"Unknown identity {request.identity!r}, expected one of " + ", ".join(SUITES))
    params = SuiteParams(m=request.m, r=request.r, order_r=request.order_r)
    report = run_suite(request.identity, request.n_max, params, request.jobs)
    out.write(render_report(report, request.fmt, request.unicode))
    return EXIT_OK if report.passed else EXIT_IDENTITY_FAILED


_COMMANDS = {
    "table": cmd_table,
    "eval": cmd_eval,
    "verify": cmd_verify,
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("degenstir").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the ``degenstir`` command; returns the exit code."""
    args = list(sys.argv[1:] if argv is None else argv)
    parser, help_option = _make_parser()
    if not parser.parse(["degenstir"] + args):
        print(f"error: {parser.errorText()}", file=sys.stderr)
        return EXIT_USAGE
    if parser.isSet(help_option):
        sys.stdout.write(parser.helpText())
        return EXIT_OK
    _configure_logging(parser.optionNames().count("v") + parser.optionNames().count("verbose"))

    try:
        setting.update()
        setting.check_environment()
        request = parse_request(parser)
        logger.debug("Request: %s", request)
        return _COMMANDS[request.command](request, sys.stdout)
    except ValueError as e:  # UsageError, ParameterError and the algebra errors
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
