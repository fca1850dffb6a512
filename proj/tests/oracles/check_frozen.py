"""Re-runs each oracle and compares with the frozen JSON next to it."""
import json
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).parent
failed = False
for name in ("sums_oracle", "predict_oracle"):
    fresh = json.loads(subprocess.run([sys.executable, str(here / f"{name}.py")], check=True,
                                      capture_output=True, text=True).stdout)
    frozen = json.loads((here / f"{name}.json").read_text())
    status = "ok" if fresh == frozen else "DIFFERS"
    failed |= fresh != frozen
    print(f"{name}: {status}")
sys.exit(1 if failed else 0)
