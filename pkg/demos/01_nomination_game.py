"""Two parties, three voters, and no stable nomination.

Walks through every nomination scheme of the four-candidate fixture, prints
who wins and which party would rather switch nominee.
"""

from pasp import nash_deviations, paper_fixture, party_scores, winning_parties
from pasp.oracle import enumerate_schemes

e = paper_fixture("thm4")
print("votes:")
for vote in e.votes:
    print("   ", " > ".join(vote))

print("\nscheme      scores  winner  deviations")
for scheme in enumerate_schemes(e):
    scores = party_scores(e, scheme)
    won = "".join(e.party_names[p] for p in sorted(winning_parties(e, scheme)))
    devs = ", ".join(f"{e.party_names[p]}->{alt}" for p, alt in nash_deviations(e, scheme))
    print(f"{' '.join(scheme):10}  {scores[0]}:{scores[1]}     {won:6}  {devs}")

# every scheme has a deviation, so the losing party keeps chasing the winner
