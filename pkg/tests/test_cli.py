"""
Tests for the command line: parsing, output formats and exit codes.
"""
import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from cli.commands import CommandContext
from cli.models import OutputFormat
from cli.parser import parse_request
from main import run
from storage.data_manager import DataManager
from utils.errors import CommandError


class TestParser(unittest.TestCase):
    """
    Test cases for parse_request.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.config_path = os.path.join(self.tmp.name, "growth.env")
        with open(self.config_path, "w", encoding="utf-8") as f:
            f.write("GROUP=z:2\nRADIUS=3\n")

    def test_growth_request(self):
        """
        Test that flags land in the request fields and params.
        """
        request, save = parse_request(["growth", "--group", "z:2", "--radius", "4", "--format", "csv"])
        self.assertEqual(request.subcommand, "growth")
        self.assertEqual(request.group, "z:2")
        self.assertEqual(request.generators, "std")
        self.assertEqual(request.params["radius"], 4)
        self.assertEqual(request.format, OutputFormat.CSV)
        self.assertIsNone(save)

    def test_config_defaults(self):
        """
        Test that a config file supplies defaults and command-line flags win.
        """
        request, _ = parse_request(["growth", "--config", self.config_path])
        self.assertEqual(request.group, "z:2")
        self.assertEqual(request.params["radius"], 3)

        request, _ = parse_request(["growth", "--config", self.config_path, "--radius", "5"])
        self.assertEqual(request.params["radius"], 5)

    def test_unknown_config_key(self):
        """
        Test that a config key with no matching flag is a usage error.
        """
        path = os.path.join(self.tmp.name, "bad.env")
        with open(path, "w", encoding="utf-8") as f:
            f.write("BOGUS=1\n")
        with self.assertRaises(CommandError):
            parse_request(["growth", "--config", path])

    def test_usage_errors(self):
        """
        Test that missing commands and bad values raise CommandError.
        """
        with self.assertRaises(CommandError):
            parse_request([])
        with self.assertRaises(CommandError):
            parse_request(["growth", "--radius", "x"])
        with self.assertRaises(CommandError):
            parse_request(["no-such-command"])


class TestRun(unittest.TestCase):
    """
    Test cases for main.run.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.data_manager = DataManager(data_dir=self.tmp.name)
        self.context = CommandContext(self.data_manager)

    def _run(self, argv):
        out = io.BytesIO()
        code = run(argv, context=self.context, stdout=out)
        return code, out.getvalue().decode("utf-8")

    def test_growth_csv(self):
        """
        Test the CSV table of Z^2 up to radius 2.
        """
        code, text = self._run(["growth", "--group", "z:2", "--radius", "2", "--format", "csv"])
        self.assertEqual(code, 0)
        self.assertEqual(text.splitlines(), ["n,shell_size,ball_size", "0,1,1", "1,4,5", "2,8,13"])

    def test_growth_text(self):
        """
        Test that text output starts with the command name.
        """
        code, text = self._run(["growth", "--group", "z", "--radius", "2", "--format", "text"])
        self.assertEqual(code, 0)
        self.assertEqual(text.splitlines()[0], "command: growth")

    def test_axb_decompose_json(self):
        """
        Test the JSON envelope of the ax+b word decomposition.
        """
        code, text = self._run(["axb-decompose", "--element", "0,5"])
        self.assertEqual(code, 0)
        report = json.loads(text)
        self.assertEqual(report["command"], "axb-decompose")
        self.assertEqual(report["verdict"], "holds-on-evidence")
        self.assertEqual(report["payload"]["n_total"], 6)

    def test_diverge_demo_columns(self):
        """
        Test the fixed CSV columns of diverge-demo.
        """
        code, text = self._run(["diverge-demo", "--case", "inverse-sqrt", "--M", "3", "--format", "csv"])
        self.assertEqual(code, 0)
        lines = text.splitlines()
        self.assertEqual(lines[0], "m,partial_sum,log_term,log_partial_sum")
        self.assertEqual(len(lines), 5)

    def test_exit_codes(self):
        """
        Test the exit status of violated verdicts, usage errors and bad groups.
        """
        self.assertEqual(self._run(["type-r", "--group", "axb", "--samples", "20"])[0], 1)
        self.assertEqual(self._run(["growth", "--group", "z", "--radius", "x"])[0], 3)
        self.assertEqual(self._run(["growth", "--radius", "2"])[0], 3)
        self.assertEqual(self._run(["growth", "--group", "bogus", "--radius", "2"])[0], 4)

    @patch("main.run_command")
    def test_unexpected_error(self, mock_run_command):
        """
        Test that an unexpected exception maps to exit status 5.
        """
        mock_run_command.side_effect = RuntimeError("boom")
        self.assertEqual(self._run(["growth", "--group", "z", "--radius", "2"])[0], 5)

    def test_save_report(self):
        """
        Test that --save stores the JSON report.
        """
        code, _ = self._run(["growth", "--group", "z", "--radius", "2", "--save", "z_growth"])
        self.assertEqual(code, 0)
        saved = self.data_manager.load_report("z_growth")
        self.assertEqual(saved["command"], "growth")
        self.assertEqual(saved["request"]["group"], "z")

    def test_seminorm_from_file(self):
        """
        Test a seminorm with the function read from a file.
        """
        path = os.path.join(self.tmp.name, "phi.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write("1 2\n-3 1\n")
        code, text = self._run(["seminorm", "--group", "z", "--scale", "one_plus_abs", "--phi", f"@{path}",
                                "--m", "1"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text)["payload"]["exact"], "8")


if __name__ == "__main__":
    unittest.main()
