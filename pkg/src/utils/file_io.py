"""File I/O utilities with UTF-8 support"""

import json
import logging
from pathlib import Path
from typing import Any

from .errors import ScenarioParseError

logger = logging.getLogger(__name__)


def read_text_file(file_path: Path) -> str | None:
    """
    Read text file with UTF-8 encoding.

    Args:
        file_path: Path to the text file

    Returns:
        File contents as string
    """
    try:
        with open(file_path, encoding="utf-8") as f:
            content = f.read()
        logger.info(f"Read text file: {file_path.name}")
        return content
    except Exception as e:
        logger.error(f"Failed to read text file: {e}")
        return None


def parse_document(text: str) -> Any:
    """
    Parse a structured-text (JSON) document.

    Args:
        text: Document contents

    Returns:
        Parsed document

    Raises:
        ScenarioParseError: With the line and column of the first syntax error
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(e.msg, line=e.lineno, column=e.colno) from e


def read_document(file_path: Path) -> Any:
    """
    Read and parse a scenario, group, extension or model file.

    Args:
        file_path: Path to the document

    Returns:
        Parsed document

    Raises:
        ScenarioParseError: If the file is unreadable or malformed
    """
    content = read_text_file(file_path)
    if content is None:
        raise ScenarioParseError(f"cannot read {file_path}")
    return parse_document(content)


def dump_document(data: Any, indent: int = 2) -> str:
    """Serialize a report with stable key order and a trailing newline."""

    return json.dumps(data, indent=indent, ensure_ascii=False) + "\n"


def get_safe_filename(name: str) -> str:
    """
    Convert string to safe filename by removing/replacing invalid characters.

    Args:
        name: Input string

    Returns:
        Safe filename string
    """
    invalid_chars = '<>:"/\\|?*'
    safe_name = name

    for char in invalid_chars:
        safe_name = safe_name.replace(char, "_")

    safe_name = safe_name.strip(" .")

    if len(safe_name) > 200:
        safe_name = safe_name[:200]

    return safe_name or "unnamed"
