"""Test file I/O utilities"""

import pytest

from src.utils.errors import ScenarioParseError
from src.utils.file_io import dump_document, get_safe_filename, parse_document, read_document, read_text_file


class TestFileIO:
    def test_read_text_file(self, tmp_path):
        """Test reading UTF-8 text"""
        path = tmp_path / "note.txt"
        path.write_text("Gal(K/k) ≅ C2", encoding="utf-8")
        assert read_text_file(path) == "Gal(K/k) ≅ C2"

    def test_read_missing_file(self, tmp_path):
        """Test a missing file reads as None"""
        assert read_text_file(tmp_path / "missing.txt") is None

    def test_read_document(self, tmp_path):
        """Test reading a scenario"""
        path = tmp_path / "scenario.json"
        path.write_text('{"tasks": []}', encoding="utf-8")
        assert read_document(path) == {"tasks": []}

    def test_read_missing_document(self, tmp_path):
        """Test an unreadable document is a parse error"""
        with pytest.raises(ScenarioParseError, match="cannot read"):
            read_document(tmp_path / "missing.json")

    def test_parse_error_location(self):
        """Test syntax errors carry their location"""
        with pytest.raises(ScenarioParseError) as exc:
            parse_document('{\n  "tasks": [1,, 2]\n}')
        assert exc.value.line == 2
        assert exc.value.column == 15
        assert str(exc.value).startswith("line 2, column 15: ")

    def test_dump_document(self):
        """Test reports end with a newline and keep key order"""
        text = dump_document({"b": 1, "a": "≅"}, indent=None)
        assert text == '{"b": 1, "a": "≅"}\n'

    def test_get_safe_filename(self):
        """Test safe filename generation"""
        assert get_safe_filename('test<>:"/\\|?*file.txt') == "test_________file.txt"
        assert get_safe_filename(" .. ") == "unnamed"
        assert len(get_safe_filename("x" * 300)) == 200
