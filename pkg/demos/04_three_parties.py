"""With at most three parties and a shared candidate axis, an equilibrium always exists."""

from pasp import centrist_equilibrium, equilibrium_exists, is_nash_equilibrium, party_scores, random_sp_pasp

for seed in range(5):
    e, cand_axis = random_sp_pasp(seed, [3, 2, 3], 15)
    centrist = centrist_equilibrium(e, cand_axis)
    print(f"seed {seed}: axis {' '.join(cand_axis)}")
    print(f"    centrist {centrist} scores {party_scores(e, centrist)} stable={is_nash_equilibrium(e, centrist)}")
    print(f"    solver   {equilibrium_exists(e)}")
