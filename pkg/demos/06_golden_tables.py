"""Recompute a golden parameter table and print the diff.

The full corpus lives behind `toric-codes reproduce <table>`; this demo
runs the two fastest tables.
"""

from toric_codes.reproduce import format_results, reproduce_table

for table_id in ("rm", "hansen-b"):
    print(f"== {table_id} ==")
    results = reproduce_table(table_id)
    print(format_results(results, "markdown"))
    print()
