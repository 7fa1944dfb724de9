#!/usr/bin/env python3
"""
Command-line entry point for ringlab.
"""
import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
