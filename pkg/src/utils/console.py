# src\utils\console.py
"""
Console Output
Colored status lines on stderr; stdout is reserved for JSON and CSV
"""

import sys

from colorama import Fore, Style, just_fix_windows_console

_settings = {'color': True}


def configure(color: bool = True):
    just_fix_windows_console()
    _settings['color'] = color and sys.stderr.isatty()


def _emit(icon: str, message: str, color: str):
    line = f"{icon} {message}"
    if _settings['color']:
        line = f"{color}{line}{Style.RESET_ALL}"
    print(line, file=sys.stderr)


def info(message: str):
    _emit("📊", message, Fore.CYAN)


def success(message: str):
    _emit("✅", message, Fore.GREEN)


def warning(message: str):
    _emit("⚠️ ", message, Fore.YELLOW)


def error(message: str):
    _emit("❌", message, Fore.RED)
