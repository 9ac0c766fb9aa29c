#!/usr/bin/env python3
"""From contract text to a validated rules store.

Walks the front half of the pipeline on the bundled fixture contract:
parse the raw text into sections and tables, scrub PII behind stable
placeholders, run the researcher loop with the deterministic backend, and
land the extracted rules in a journal store.
"""

from pathlib import Path

from slamon.docio import PIIConfig, RawDocument, find_pii, parse_document, scrub_pii
from slamon.extraction import DeterministicBackend, extract_rules
from slamon.rulesdb import RulesStore, ViolationLevel

ROOT = Path(__file__).resolve().parents[1]
OUT = Path(__file__).resolve().parent / "output"


def main() -> None:
    body = (ROOT / "fixtures" / "sla_customer_a.txt").read_text()
    raw = RawDocument(doc_id="sla-a", source_format="markdown-like", body=body)
    pii = PIIConfig.from_file(ROOT / "fixtures" / "pii_config.json")

    print("=== 1. parse ===")
    parsed = parse_document(raw)
    for i, section in enumerate(parsed.sections):
        print(f"  [{i}] {section.heading or '(preamble)'}  "
              f"paragraphs={len(section.paragraphs)} bullets={len(section.bullets)}")
    print(f"  tables: {len(parsed.tables)}")

    print("\n=== 2. scrub PII ===")
    doc, redactions = scrub_pii(parsed, pii)
    print(f"  customer alias: {doc.customer_alias}")
    print(f"  replacements:   {doc.redaction_count}")
    print(f"  placeholders:   {', '.join(sorted(redactions.entries))}")
    leaks = find_pii(doc.rendered_text(), pii)
    print(f"  residual pattern matches: {len(leaks)} (must be 0)")

    print("\n=== 3. extract rules ===")
    result = extract_rules(doc, DeterministicBackend(),
                           trace_path=OUT / "extraction_trace.jsonl")
    print(f"  complete: {result.complete}  iterations: {result.iterations}  "
          f"chars spent: {result.chars_spent}")
    for rule in result.ruleset:
        print(f"  {rule.rule_id}: {rule.metric}, {rule.aggregation_window_s}s mean")
        for name in ("none", "l1", "l2"):
            band = rule.bands.band(ViolationLevel.from_label(name))
            print(f"      {name:>4}: {' or '.join(str(iv) for iv in band)}"
                  f"   credit {rule.credit_pct[name]:.0f}%")

    print("\n=== 4. store ===")
    OUT.mkdir(exist_ok=True)
    store_path = OUT / "rules.jsonl"
    store_path.unlink(missing_ok=True)
    store = RulesStore(store_path)
    store.load_ruleset(result.ruleset)
    print(f"  journal: {store_path} ({len(store.get_rules(doc.customer_alias))} rules, "
          f"version 1 each)")
    print(f"  trace:   {OUT / 'extraction_trace.jsonl'}")


if __name__ == "__main__":
    main()
