"""
Main entry point - runs the polybohr command line
"""

import sys

from polybohr.cli.router import main

if __name__ == "__main__":
    sys.exit(main())
