"""Tree Cover Lab Package."""

__version__ = "0.1.0"
__author__ = "Tree Cover Lab"
__email__ = "treecover-lab@example.com"
__description__ = "Exact tree cover numbers, extremal families and theorem checks for small graphs"

from . import cli  # keep the submodule bound (not shadowed by the click group)
from .__main__ import main

__all__ = ["cli", "main"]
