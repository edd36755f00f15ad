import sys

from degenstir import app

if __name__ == '__main__':
    sys.exit(app.main())
