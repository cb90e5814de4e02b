"""
Entry point for running twoarcs as a module: python -m twoarcs
"""

from twoarcs.cli import main

if __name__ == "__main__":
    main()
