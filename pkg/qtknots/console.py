"""
Console styling, progress bars and logging setup for the command-line front end.
"""

import logging
import os
import shutil
import sys

# Check for tqdm (progress bar)
try:
    from tqdm import tqdm
    TQDM_AVAILABLE = True
except ImportError:
    TQDM_AVAILABLE = False
    tqdm = lambda x, **kwargs: x  # Simple passthrough

# --- Color and styling definitions ---
try:
    COLORIZE = sys.stdout.isatty() and os.name != 'nt'
except Exception:
    COLORIZE = False

# ANSI color/style codes
if COLORIZE:
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    RED = "\033[91m"
    BLUE = "\033[94m"
    MAGENTA = "\033[95m"
    CYAN = "\033[96m"
    BOLD = "\033[1m"
    RESET = "\033[0m"
else:
    GREEN = YELLOW = RED = BLUE = MAGENTA = CYAN = BOLD = RESET = ""

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def print_header(text):
    """Prints a styled header to stderr so stdout stays machine-readable"""
    term_width = shutil.get_terminal_size().columns
    separator = "=" * (min(term_width, 80))
    print(f"\n{BOLD}{BLUE}{separator}{RESET}", file=sys.stderr)
    print(f"{BOLD}{BLUE}{text}{RESET}", file=sys.stderr)
    print(f"{BOLD}{BLUE}{separator}{RESET}\n", file=sys.stderr)


def print_success(text):
    """Prints a success message with green color"""
    print(f"{GREEN}✓ {text}{RESET}", file=sys.stderr)


def print_warning(text):
    """Prints a warning message with yellow color"""
    print(f"{YELLOW}⚠ Warning: {text}{RESET}", file=sys.stderr)


def print_error(text):
    """Prints an error message with red color"""
    print(f"{RED}✗ Error: {text}{RESET}", file=sys.stderr)


def print_info(text):
    """Prints an info message with cyan color"""
    print(f"{CYAN}ℹ {text}{RESET}", file=sys.stderr)


def progress(iterable, desc: str, enabled: bool = True, **kwargs):
    """Wrap an iterable in a tqdm bar on stderr when tqdm is installed and enabled."""
    if not (TQDM_AVAILABLE and enabled):
        return iterable
    return tqdm(iterable, desc=desc, file=sys.stderr, leave=False, **kwargs)


def configure_logging(verbose: bool = False) -> None:
    """Route library logging to stderr; DEBUG with --verbose, WARNING otherwise."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
