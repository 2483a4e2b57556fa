"""Compare training throughput with the numba kernels against the numpy fallback.

The kernel path is chosen once, when `webembed._kernels` is imported, from the
WEBEMBED_DISABLE_NUMBA environment variable — so each path runs in its own
subprocess. Usage:

    python3 benchmarks/bench_kernels.py [--sentences 4000] [--epochs 3] [--dim 64]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = """
import json, os, random, sys, time
from webembed.trainer import TrainingConfig, train

params = json.loads(sys.argv[1])
rng = random.Random(11)
vocab = [f"w{i}" for i in range(200)]
corpus = [
    [rng.choice(vocab) for _ in range(12)] for _ in range(params["sentences"])
]
config = TrainingConfig(
    dim=params["dim"],
    min_count=1,
    epochs=params["epochs"],
    threads=1,
    seed=3,
    bucket_count=4096,
    subsample_t=1.0,
)
train(corpus[:50], config)  # warm up (JIT compilation on the numba path)
start = time.perf_counter()
model = train(corpus, config)
elapsed = time.perf_counter() - start
from webembed._kernels import NUMBA_ENABLED
print(json.dumps({
    "path": "numba" if NUMBA_ENABLED else "numpy",
    "seconds": elapsed,
    "tokens_per_sec": params["sentences"] * 12 * params["epochs"] / elapsed,
    "final_loss": model.epoch_mean_loss[-1],
}))
"""


def run(disable_numba: bool, params: dict) -> dict:
    env = dict(os.environ)
    if disable_numba:
        env["WEBEMBED_DISABLE_NUMBA"] = "1"
    else:
        env.pop("WEBEMBED_DISABLE_NUMBA", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(params)],
        env=env,
        check=True,
        capture_output=True,
        text=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sentences", type=int, default=4000)
    parser.add_argument("--epochs", type=int, default=3)
    parser.add_argument("--dim", type=int, default=64)
    args = parser.parse_args()
    params = vars(args)

    results = [run(False, params), run(True, params)]
    print(f"{'path':<8} {'seconds':>9} {'tokens/s':>12} {'final loss':>11}")
    for r in results:
        print(
            f"{r['path']:<8} {r['seconds']:>9.2f} "
            f"{r['tokens_per_sec']:>12.0f} {r['final_loss']:>11.4f}"
        )
    speedup = results[1]["seconds"] / results[0]["seconds"]
    print(f"numba speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
