"""
Tests for the data manager.
"""
import math
import os
import tempfile
import unittest

from groups import parse_group
from scales import parse_scale
from storage.data_manager import DataManager
from utils.errors import DomainError, GroupSpecError, ScaleNotFoundError


class TestDataManager(unittest.TestCase):
    """
    Test cases for the DataManager class.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.data_manager = DataManager(data_dir=self.tmp.name)

    def _write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_load_scale_table(self):
        """
        Test loading a scale table with comments and rational values.
        """
        path = self._write("sigma.txt", "# custom scale\n0 1\n1 2\n-1 5/2  # reflected\n")
        table = self.data_manager.load_scale_table(path)
        self.assertEqual(set(table), {"0", "1", "-1"})
        self.assertAlmostEqual(table["-1"], math.log(2.5))
        self.assertIs(self.data_manager.load_scale_table(path), table)

    def test_relative_paths_use_data_dir(self):
        """
        Test that relative names are looked up in the data directory.
        """
        self._write("rel.txt", "0 1\n")
        self.assertEqual(self.data_manager.load_scale_table("rel.txt"), {"0": 0.0})

    def test_bad_scale_tables(self):
        """
        Test malformed lines, non-positive values and missing files.
        """
        with self.assertRaises(GroupSpecError):
            self.data_manager.load_scale_table(self._write("a.txt", "0 x\n"))
        with self.assertRaises(GroupSpecError):
            self.data_manager.load_scale_table(self._write("b.txt", "7\n"))
        with self.assertRaises(DomainError):
            self.data_manager.load_scale_table(self._write("c.txt", "0 -1\n"))
        with self.assertRaises(DomainError):
            self.data_manager.load_scale_table("missing.txt")

    def test_table_scale(self):
        """
        Test a table: scale on Z backed by the data manager.
        """
        z = parse_group("z")
        path = self._write("z.txt", "0 1\n1 2\n-1 2\n")
        scale = parse_scale(f"table:{path}", z, data_manager=self.data_manager)
        self.assertAlmostEqual(scale.log_value(z.parse_element("1")), math.log(2))
        with self.assertRaises(ScaleNotFoundError):
            scale.log_value(z.parse_element("2"))

    def test_function_literals(self):
        """
        Test inline and file function literals.
        """
        self.assertEqual(DataManager.parse_function_literal("0 1; 1 1/2"), [("0", "1"), ("1", "1/2")])
        path = self._write("phi.txt", "(0,0) 1\n(1,0) -3/4\n")
        self.assertEqual(self.data_manager.load_function_literal(path), [("(0,0)", "1"), ("(1,0)", "-3/4")])
        with self.assertRaises(GroupSpecError):
            DataManager.parse_function_literal("0 1; 2")

    def test_reports(self):
        """
        Test saving and loading reports.
        """
        report = {"command": "growth", "payload": {"ball_sizes": [1, 3, 5]}}
        path = self.data_manager.save_report("run1", report)
        self.assertTrue(os.path.exists(path))
        self.data_manager.clear_cache()
        self.assertEqual(self.data_manager.load_report("run1"), report)
        self.assertIsNone(self.data_manager.load_report("run2"))
        with self.assertRaises(DomainError):
            self.data_manager.save_report("../escape", report)


if __name__ == "__main__":
    unittest.main()
