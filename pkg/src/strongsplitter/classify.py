"""The E5-without-E4 classification sweep."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .catalog import derive_defg, get
from .core import BinaryMatroid, dual
from .generate import DedupCache, generate_class
from .iso import canonical_form
from .minors import ClassSpec, restrictions_with


def e5_spec() -> ClassSpec:
    return ClassSpec((get("E5").matroid,), (get("E4").matroid,))


@dataclass
class Classification:
    members: list[BinaryMatroid]
    problems: list[str] = field(default_factory=list)
    defg_found: int = 0
    # every rank-5 member is a restriction of the largest generated rank-5 member
    largest_rank5_contains_all: bool = False

    @property
    def ok(self) -> bool:
        return not self.problems

    def counts(self) -> Counter:
        return Counter((M.rank, M.size) for M in self.members)


def classify_e5(max_elements: int = 17, *, jobs: int = 1, cache: DedupCache | None = None) -> Classification:
    """Generate the class and check each member.

    A member of rank 5 must be a restriction of R17, a member of corank 5
    must be the dual of one, and any other member must be isomorphic to M12.
    """
    spec = e5_spec()
    members = generate_class(get("E5").matroid, spec, max_elements, jobs=jobs, cache=cache)
    R17 = get("R17").matroid
    in_r17 = {canonical_form(P) for P in restrictions_with(R17, spec)}
    m12 = canonical_form(get("M12").matroid)
    report = Classification(members)
    for M in members:
        cf = canonical_form(M)
        if M.rank == 5 and cf not in in_r17:
            report.problems.append(f"rank-5 member with {M.size} elements is not a restriction of R17")
        elif M.corank == 5 and canonical_form(dual(M)) not in in_r17:
            report.problems.append(f"corank-5 member with {M.size} elements is not a dual restriction of R17")
        elif M.rank != 5 and M.corank != 5 and cf != m12:
            report.problems.append(f"member of rank {M.rank} with {M.size} elements is not M12")
    rank5 = [M for M in members if M.rank == 5]
    if rank5:
        inside = {canonical_form(P) for P in restrictions_with(max(rank5, key=lambda M: M.size), spec)}
        report.largest_rank5_contains_all = all(canonical_form(M) in inside for M in rank5)
    forms = {canonical_form(M) for M in members if M.rank == 5 and M.size == 12}
    report.defg_found = sum(canonical_form(e.matroid) in forms for e in derive_defg())
    if report.defg_found != 4:
        report.problems.append(f"only {report.defg_found} of D, E, F, G found among members")
    return report


def format_classification(report: Classification) -> str:
    lines = ["rank\tn\tclasses"]
    for (r, n), count in sorted(report.counts().items()):
        lines.append(f"{r}\t{n}\t{count}")
    lines.append(f"members\t{len(report.members)}")
    lines.append(f"D-G found\t{report.defg_found}")
    lines.append(
        "rank-5 members inside the largest one\t" + ("yes" if report.largest_rank5_contains_all else "no")
    )
    lines.extend(f"problem\t{p}" for p in report.problems)
    lines.append("verdict\t" + ("ok" if report.ok else "FAILED"))
    return "\n".join(lines) + "\n"
