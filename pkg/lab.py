"""Entry point: python lab.py <study> [--config FILE] [--set key=value ...]."""
import sys

from src.application.controllers import main


if __name__ == "__main__":
    sys.exit(main())
