import sys
from pathlib import Path

# test modules import shared machinery from helpers.py next to them
sys.path.insert(0, str(Path(__file__).resolve().parent))
