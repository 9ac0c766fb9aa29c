#!/usr/bin/env python3
"""Seeded telemetry with injected violations, labeled programmatically.

Generates the stock multi-episode scenario, windows it, and labels every
window against the rules journal.  Shows the class balance per split and
demonstrates a relabel after tightening the power rule.
"""

import math
from collections import Counter
from pathlib import Path

from slamon.labeler import WindowingConfig, build_dataset, relabel, save_dataset
from slamon.rulesdb import Interval, RuleSet, RulesStore, ThresholdBands, RuleSpec
from slamon.telemetry import reference_sim_config, simulate

ROOT = Path(__file__).resolve().parents[1]
OUT = Path(__file__).resolve().parent / "output"


def class_counts(examples, rule_id):
    return Counter(ex.labels[rule_id].label for ex in examples)


def main() -> None:
    rules = RulesStore(ROOT / "fixtures" / "rules_customer_a.jsonl").get_rules("Customer_A")
    config = reference_sim_config()
    print(f"=== 1. simulate ===")
    print(f"  seed {config.seed}, {config.duration_s / 86400:.1f} days, "
          f"{len(config.episodes)} episodes")
    points = simulate(config, rules)
    print(f"  points: {len(points):,}")

    print("\n=== 2. window + label ===")
    dataset = build_dataset(points, rules, WindowingConfig())
    print(f"  windows: {len(dataset.examples):,} "
          f"(lookback 60 steps, horizon 90 steps, stride 3)")
    for split in ("train", "validation", "test"):
        examples = dataset.split(split)
        print(f"  {split:>10} ({len(examples):>5}):", end="")
        for rule in rules:
            counts = class_counts(examples, rule.rule_id)
            print(f"  {rule.metric.split('_')[0]}="
                  f"{counts['none']}/{counts['l1']}/{counts['l2']}", end="")
        print()

    OUT.mkdir(exist_ok=True)
    path = save_dataset(dataset, OUT / "dataset.jsonl")
    print(f"  saved: {path} (+ manifest, digest {dataset.digest()[:16]}...)")

    print("\n=== 3. relabel after a contract edit ===")
    power = rules["CUST_A_PWR_01"]
    tightened = RuleSpec(
        rule_id=power.rule_id, customer=power.customer, metric=power.metric,
        aggregation_window_s=power.aggregation_window_s,
        bands=ThresholdBands(
            none_band=(Interval(-math.inf, 28.0),),
            l1_band=(Interval(28.0, 35.0, lo_open=True),),
            l2_band=(Interval(35.0, math.inf, lo_open=True),),
        ),
        credit_pct=power.credit_pct, version=power.version + 1,
    )
    edited = RuleSet(customer="Customer_A", rules=sorted(
        [tightened, rules["CUST_A_TEMP_01"], rules["CUST_A_HUM_01"]],
        key=lambda r: r.rule_id,
    ))
    _, report = relabel(dataset, edited)
    print(f"  power L1 bound 30 -> 28 kW; labels changed: {report['changed']}")


if __name__ == "__main__":
    main()
