"""
Allows `python -m polybohr <command> ...`
"""

import sys

from polybohr.cli.router import main

if __name__ == "__main__":
    sys.exit(main())
