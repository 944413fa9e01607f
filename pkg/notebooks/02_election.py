# %% [markdown]
# # Weight-based leader election on a static graph
#
# Freeze the deployment graph and iterate only the weight rules.

# %%
from swarmnet import SwarmConfig, deploy
from swarmnet.election import election_step, leader_count, leader_of
from swarmnet.topology import build_graph

cfg = SwarmConfig(seed=7)
st = deploy(cfg)
w = st.weights
for t in range(13):
    if t % 2 == 0:
        print(t, w, "leader:", leader_of(w, cfg))
    w = election_step(w, st.graph, cfg)

# %% [markdown]
# Followers settle one above the leader weight. That value lies outside the
# ordinary weight range, which the acceptance gate reports.

# %%
print("leader weight:", cfg.effective_leader_id, "follower weight:", sorted(set(w) - {cfg.effective_leader_id}))

# %% [markdown]
# A five-node chain. The demotion rule only sees adjacent leaders, so two
# leaders two hops apart both survive.

# %%
from swarmnet.core import Vec3

chain = build_graph([Vec3(10.0 * i, 0, 0) for i in range(5)], 10.0)
chain_cfg = SwarmConfig(n=5)
w = [3, 0, 4, 1, 2]
for t in range(12):
    w = election_step(w, chain, chain_cfg)
print(w, "leaders:", leader_count(w, chain_cfg))
