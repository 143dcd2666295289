"""Runs the degcorr CLI on a few graphs and validates every JSON report."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        bridge = tmp / "bridge.txt"
        subprocess.run([binary, "generate", "bridge", "--k", "4", "--m", "7", "--out", str(bridge)], check=True)
        cm = tmp / "cm.txt"
        subprocess.run([binary, "generate", "iid-cm", "--n", "300", "--gamma", "2.5", "--seed", "3",
                        "--out", str(cm)], check=True)
        (tmp / "cycle.txt").write_text("0 1\n1 2\n2 0\n")
        (tmp / "empty.txt").write_text("# empty\n")
        (tmp / "dups.txt").write_text("0 1\n0 1\n2 2\n1 2\n")
        runs = [
            ["compute", "--input", str(bridge)],
            ["compute", "--input", str(cm), "--types", "in_out", "--measures", "kendall,pearson"],
            ["compute", "--input", str(tmp / "cycle.txt")],
            ["compute", "--input", str(tmp / "empty.txt")],
            ["compute", "--input", str(tmp / "dups.txt")],
            ["randomize", "--input", str(bridge), "--reps", "3"],
            ["randomize", "--input", str(cm), "--reps", "2", "--types", "out_out"],
        ]
        failures = 0
        for args in runs:
            out = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
            errors = list(validator.iter_errors(json.loads(out)))
            status = "ok" if not errors else "INVALID"
            print(f"{status}: {' '.join(args[:1] + [pathlib.Path(args[2]).name] + args[3:])}")
            for e in errors:
                print(f"  {list(e.absolute_path)}: {e.message}")
            failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
