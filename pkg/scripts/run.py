#!/usr/bin/env python
"""
Command-line interface

Usage:
    python scripts/run.py gen --family universal-d1 --p 24 --n 3
    python scripts/run.py table --family classic-fermat --p 18 --n 3
    python scripts/run.py verify --plan plans/acceptance.yml
"""
import os
import sys

from dotenv import load_dotenv

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

load_dotenv()

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
