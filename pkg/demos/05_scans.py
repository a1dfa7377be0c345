"""Exploration scans: the profile of T in the aspect ratio, and integrality.

The profile is piecewise constant between breakpoint fractions; the scan
evaluates one representative per interval (cross-validated between two
pipelines) plus a safeguard midpoint.  At the special fractions with
p + q = 3d the values are checked to be nonnegative integers.
"""

from ellsuper import integrality_scan, scan_monotonicity

for d in (1, 2, 3):
    report = scan_monotonicity(d)
    print(f"T(d={d}, a) over the intervals of a:")
    for row in report["profile"]:
        print(f"  a in ({row['interval_start']}, ...): T = {row['T']}")
    print(f"  a = inf: T = {report['infinity_T']}")
    print(f"  nondecreasing: {report['nondecreasing']}   midpoints consistent: {report['consistent']}")
    print()

for d in (3, 4, 5):
    report = integrality_scan(d)
    print(f"boundary fractions p/q with p + q = {3*d} (d = {d}):")
    for row in report["rows"]:
        notes = []
        if row["vanishes"]:
            notes.append("vanishes")
        if row["adjunction_bound"]:
            notes.append("within adjunction bound")
        print(f"  a = {row['p']}/{row['q']:<3} T = {row['T']:>4}   {', '.join(notes)}")
    print(f"  all integral: {report['all_integral']}, all nonnegative: {report['all_nonnegative']}")
    print()
