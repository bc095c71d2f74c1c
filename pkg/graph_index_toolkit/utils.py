import os
import sys
from pathlib import Path
from typing import Optional

STDIO = '-'


def ensure_dir(directory: str):
    """Create directory if it doesn't exist"""
    if directory:
        Path(directory).mkdir(parents=True, exist_ok=True)


def read_text(path: str) -> str:
    """Read a whole file, or standard input when path is '-'"""
    if path == STDIO:
        return sys.stdin.read()
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def write_text(path: Optional[str], text: str) -> None:
    """Write text to path, or to standard output when path is None or '-'"""
    if path is None or path == STDIO:
        sys.stdout.write(text)
        return
    ensure_dir(os.path.dirname(path))
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
