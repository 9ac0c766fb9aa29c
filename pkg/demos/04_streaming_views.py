#!/usr/bin/env python3
"""Rolling inference feeding the three stakeholder views.

Replays a simulated stream with one L1 power episode through the engine
(with the exact-oracle stub predictor), then folds each prediction event
into the finance, operations, and compliance views and verifies the audit
chain end to end.
"""

from pathlib import Path

from slamon.rulesdb import RulesStore
from slamon.stream import (
    AuditChain,
    Contract,
    StreamingEngine,
    StubOracleModel,
    append_jsonl,
    canonical_record_line,
    default_playbook,
    to_compliance,
    to_finance,
    to_ops,
    verify_chain,
)
from slamon.telemetry import Episode, SimConfig, simulate

ROOT = Path(__file__).resolve().parents[1]
OUT = Path(__file__).resolve().parent / "output"


def main() -> None:
    rules = RulesStore(ROOT / "fixtures" / "rules_customer_a.jsonl").get_rules("Customer_A")
    config = SimConfig(
        seed=77, duration_s=5 * 3600,
        episodes=[Episode("power_kw", 2 * 3600, 2 * 3600, "l1", ramp_s=1800)],
    )
    points = simulate(config, rules)
    engine = StreamingEngine("Customer_A", StubOracleModel(points, rules), rules)
    contract = Contract("Customer_A", 100_000.0, "2025-07")
    playbook = default_playbook(rules)
    chain = AuditChain()

    print("=== replaying stream in 10-minute batches ===")
    events, records = [], []
    finance_total = 0.0
    batch, cutoff = [], None
    for point in points + [None]:
        if point is None or (cutoff is not None and point.timestamp >= cutoff):
            if batch:
                result = engine.step(batch)
                window = engine.last_window()
                for event in result.events:
                    events.append(event)
                    view = to_finance(event, contract, rules[event.rule_id])
                    finance_total += view.expected_credit_usd
                    ops = to_ops(event, playbook, engine.lead_time_s)
                    records.append(to_compliance(event, window.lookback, chain))
                    if event.level != "none":
                        print(f"  {event.rule_id} {event.level.upper()} "
                              f"@t+{event.window_end - points[0].timestamp:.0f}s "
                              f"p={max(event.probs):.2f}  "
                              f"credit ${view.expected_credit_usd:,.0f}  "
                              f"risk={ops.risk_level}  actions={ops.recommended_actions}")
                batch = []
            if point is None:
                break
            cutoff = point.timestamp + 600.0
        batch.append(point)

    levels = {}
    for event in events:
        levels[event.level] = levels.get(event.level, 0) + 1
    print(f"\n=== summary ===")
    print(f"  events: {len(events)} {levels}")
    print(f"  expected credit liability over the window: ${finance_total:,.2f}")

    broken = verify_chain(records)
    print(f"  audit chain: {len(records)} records, "
          f"{'intact' if broken is None else f'BROKEN at {broken}'}")

    OUT.mkdir(exist_ok=True)
    audit_path = OUT / "audit.jsonl"
    audit_path.unlink(missing_ok=True)
    append_jsonl(audit_path, [r.to_json() for r in records], canonical=True)
    print(f"  written: {audit_path} (verify with `slamon verify-chain {audit_path}`)")

    # tamper demonstration
    lines = audit_path.read_text().splitlines()
    lines[5] = lines[5].replace('"l1"', '"l2"', 1) if '"l1"' in lines[5] else lines[5][:-2] + '1}'
    tampered = OUT / "audit_tampered.jsonl"
    tampered.write_text("\n".join(lines) + "\n")
    from slamon.stream import verify_chain_lines

    print(f"  tampered copy breaks at index: {verify_chain_lines(lines)} "
          f"({tampered})")

    print(f"\n(first L1 finance view: credit_pct 5.0 of MRC ${contract.mrc_usd:,.0f} "
          f"at p=1.0 = $5,000 expected)")


if __name__ == "__main__":
    main()
