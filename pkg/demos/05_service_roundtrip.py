#!/usr/bin/env python3
"""Everything through the HTTP facade, the way the dashboard drives it.

Spins the service up in-process, ingests the fixture contract, extracts
rules, simulates and labels telemetry via jobs, edits a rule (which queues
an automatic relabel), streams telemetry with an injected L2 episode, and
reads back all three stakeholder views plus the audit verification state.
"""

import shutil
import tempfile
import time
from pathlib import Path

from fastapi.testclient import TestClient

from slamon.api.service import ServiceConfig, create_app
from slamon.rulesdb import RulesStore
from slamon.stream import Contract
from slamon.telemetry import Episode, SimConfig, simulate

ROOT = Path(__file__).resolve().parents[1]


def wait(client, job_id):
    while True:
        record = client.get(f"/jobs/{job_id}").json()
        if record["status"] in ("done", "failed"):
            return record
        time.sleep(0.1)


def main() -> None:
    data_dir = Path(tempfile.mkdtemp(prefix="slamon-demo-"))
    config = ServiceConfig(
        data_dir=data_dir,
        pii_config_path=ROOT / "fixtures" / "pii_config.json",
        contracts={"Customer_A": Contract("Customer_A", 100_000.0, "2025-07")},
    )
    app = create_app(config)
    with TestClient(app) as client:
        print("=== 1. ingest + extract over HTTP ===")
        body = (ROOT / "fixtures" / "sla_customer_a.txt").read_text()
        response = client.post("/documents", json={
            "doc_id": "sla-a", "source_format": "markdown-like", "body": body,
        }).json()
        print(f"  sanitized: alias={response['customer_alias']} "
              f"redactions={response['redaction_count']}")
        extracted = client.post("/rules/extract", json={"doc_id": "sla-a"}).json()
        print(f"  extraction complete={extracted['complete']} "
              f"rules={[r['rule_id'] for r in extracted['rules']]}")

        print("\n=== 2. simulate + label via jobs ===")
        job = client.post("/jobs/simulate", json={"seed": 21, "duration_s": 6 * 3600}).json()
        print(f"  simulate -> {wait(client, job['job_id'])['status']}")
        job = client.post("/jobs/label", json={"customer": "Customer_A"}).json()
        print(f"  label    -> {wait(client, job['job_id'])['status']}")

        print("\n=== 3. edit a rule; relabel fires automatically ===")
        rules = client.get("/rules", params={"customer": "Customer_A"}).json()["rules"]
        power = next(r for r in rules if r["rule_id"] == "CUST_A_PWR_01")
        power["bands"]["none"][0]["hi"] = 28.0
        power["bands"]["l1"][0]["lo"] = 28.0
        response = client.put("/rules/CUST_A_PWR_01", json=power).json()
        print(f"  new version: {response['version']}, "
              f"relabel job {response['relabel_job_id']} -> "
              f"{wait(client, response['relabel_job_id'])['status']}")

        print("\n=== 4. live telemetry with an injected L2 power episode ===")
        store_rules = RulesStore(data_dir / "rules.jsonl").get_rules("Customer_A")
        sim = SimConfig(
            seed=5, duration_s=3 * 3600,
            episodes=[Episode("power_kw", 3600, 5400, "l2", ramp_s=900)],
        )
        points = simulate(sim, store_rules)
        payload = [{
            "timestamp": p.timestamp, "customer": p.customer, "rack": p.rack_id,
            "channel": p.channel, "sensor": p.sensor_id, "value": p.value,
        } for p in points]
        summary = client.post("/telemetry", json={"points": payload}).json()
        print(f"  ingest summary: {summary['events']} events, "
              f"{summary['accepted']} points accepted")

        events = client.get("/views/events", params={"customer": "Customer_A"}).json()
        worst = max(events, key=lambda e: ("none", "l1", "l2").index(e["level"]))
        print(f"  worst event: {worst['rule_id']} level={worst['level']}")
        finance = client.get("/views/finance", params={"customer": "Customer_A"}).json()
        at_risk = sum(row["expected_credit_usd"] for row in finance)
        print(f"  finance view: {len(finance)} rows, ${at_risk:,.0f} at risk")
        ops = client.get("/views/ops", params={"customer": "Customer_A"}).json()
        critical = [row for row in ops if row["risk_level"] == "critical"]
        print(f"  ops view: {len(critical)} critical rows")
        audit = client.get("/audit/verify", params={"customer": "Customer_A"}).json()
        print(f"  audit chain: {audit['records']} records, intact={audit['intact']}")

    shutil.rmtree(data_dir, ignore_errors=True)
    print("\n(data dir cleaned up)")


if __name__ == "__main__":
    main()
