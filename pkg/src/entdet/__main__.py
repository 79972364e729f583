"""Allow ``python -m entdet`` as an alias for the ``entdet`` console script."""

from .cli import console_main

console_main()
