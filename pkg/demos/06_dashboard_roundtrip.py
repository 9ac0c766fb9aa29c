#!/usr/bin/env python3
"""Dashboard round trip against the fixture service.

Starts the HTTP service with the fixture rules and a demo contract, then
runs the frontend's integration test through the real compiled client
modules: rule edit -> new version + visible relabel job + moved band
shading, injected L2 episode -> critical risk tile within one window
stride, liability and audit tiles consistent with the payloads.

Requires the frontend to be installed (`npm install` under frontend/).
"""

import json
import os
import shutil
import socket
import subprocess
import sys
import tempfile
import time
import urllib.request
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def wait_health(url: str, timeout_s: float = 20.0) -> None:
    deadline = time.time() + timeout_s
    while time.time() < deadline:
        try:
            with urllib.request.urlopen(url + "/health", timeout=1) as response:
                if response.status == 200:
                    return
        except OSError:
            time.sleep(0.2)
    raise RuntimeError("service did not come up")


def main() -> int:
    data_dir = Path(tempfile.mkdtemp(prefix="slamon-roundtrip-"))
    shutil.copy(ROOT / "fixtures" / "rules_customer_a.jsonl", data_dir / "rules.jsonl")
    config = {
        "data_dir": str(data_dir),
        "pii_config": str(ROOT / "fixtures" / "pii_config.json"),
        "frontend_dir": str(ROOT / "frontend" / "dist"),
        "contracts": [
            {"customer": "Customer_A", "mrc_usd": 100000.0, "billing_period": "2025-07"}
        ],
    }
    config_path = data_dir / "service.json"
    config_path.write_text(json.dumps(config, indent=2))

    port = free_port()
    url = f"http://127.0.0.1:{port}"
    server = subprocess.Popen(
        [sys.executable, "-m", "slamon.api.cli", "serve",
         "--config", str(config_path), "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        wait_health(url)
        print(f"service up at {url} (ui at {url}/ui/)")
        env = dict(os.environ, SLAMON_SERVICE_URL=url)
        result = subprocess.run(
            ["npx", "vitest", "run", "tests/integration.roundtrip.test.ts"],
            cwd=ROOT / "frontend",
            env=env,
        )
        if result.returncode == 0:
            print("\nDASHBOARD ROUND TRIP PASS")
        else:
            print("\nDASHBOARD ROUND TRIP FAIL")
        return result.returncode
    finally:
        server.terminate()
        server.wait(timeout=10)
        shutil.rmtree(data_dir, ignore_errors=True)


if __name__ == "__main__":
    sys.exit(main())
