"""Finding a party axis.

A profile can fail to be single-peaked on any candidate ordering and still
line up along an ordering of parties.
"""

from pasp import paper_fixture, partition_voters, recognize_pasp
from pasp.oracle import brute_single_peaked_axis

for name in ("intro", "example-sec3", "thm5"):
    e = paper_fixture(name)
    axis = recognize_pasp(e)
    print(f"{name}: party axis {' < '.join(e.party_names[p] for p in axis)}")
    print(f"    single-peaked on some candidate axis: {brute_single_peaked_axis(e) is not None}")
    part = partition_voters(e, axis)
    loyal = {e.party_names[p]: len(vs) for p, vs in part.loyal.items() if vs}
    swing = {f"{e.party_names[a]}|{e.party_names[b]}": len(vs) for (a, b), vs in part.swing.items() if vs}
    print(f"    loyal voters {loyal}, swing voters {swing}")
