"""Run (or resume) the mini-Countdown data-quality / UFT experiment and print its summary.

    python3 demos/desk_experiment.py [work_dir]

Every stage is cached in the work directory (default results/desk), so the
script can be interrupted and restarted.
"""

import json
import sys
import time
from pathlib import Path

from pathforge.experiments import DeskConfig, run

work = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "results" / "desk"
t0 = time.time()
summary = run(work, DeskConfig(), log=lambda m: print(f"[{time.time() - t0:7.0f}s] {m}", flush=True))
print(json.dumps({k: summary[k] for k in ("quality", "per_seed", "data_quality_check", "uft_check",
                                          "base_test_greedy", "seconds_total")}, indent=1))
