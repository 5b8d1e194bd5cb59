#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Launcher for the golay-zcz command-line interface
"""
import sys
from pathlib import Path

# Add src to path
ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT / "src"))

from golay_zcz.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
