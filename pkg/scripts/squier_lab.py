"""
Command-line entry point for squier-lab.

Examples:
  python scripts/squier_lab.py complete data/corpus/c3.pres
  python scripts/squier_lab.py aspherical data/corpus/trivial_x.pres --truncate 6 --margin 2
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli import main


if __name__ == '__main__':
    sys.exit(main())
