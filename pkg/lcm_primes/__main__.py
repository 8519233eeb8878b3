"""Entry point for `python -m lcm_primes`."""

import sys

from lcm_primes.cli import main

if __name__ == "__main__":
    sys.exit(main())
