#!/usr/bin/env python3
# =============================================================================
# monomial_intersection.py – Starter ohne Installation (src/ auf den Pfad)
# =============================================================================
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from monomial_intersection.cli.main import main  # noqa: E402

if __name__ == "__main__":
    main()
