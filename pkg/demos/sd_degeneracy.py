"""Randomized sd-degeneracy sequence on a planted instance.

Plants a graph that admits an sd-degeneracy sequence of small width,
recovers one with the randomized sampler under the twin-width preset,
validates it by sequential replay, and finally turns the sequence into
a signed tree model that decodes back to the input graph.
"""

from stmgraph import (SdConfig, decode_bruteforce, graphs_equal,
                      preset_twinwidth, sd_sequence_randomized,
                      sdseq_to_stm, validate_sequence)
from stmgraph.gen import planted_sdseq

n, d = 128, 3
g, _ = planted_sdseq(n, d, seed=5)
print(f"planted graph: n={n}, m={g.m}, planted width <= {d}")

base = preset_twinwidth(d, 1.0, n)
cfg = SdConfig(base.g, base.gamma, base.p_hat, base.cap, seed=5)
print(f"preset: g={cfg.g}, gamma={cfg.gamma}, p_hat={cfg.p_hat:.4f}, "
      f"cap={cfg.cap}")

seq, report = sd_sequence_randomized(g, cfg)
replay = validate_sequence(g, seq)
print(f"recovered sequence of {len(seq.pairs)} steps, "
      f"replayed width {replay.width} (budget gamma={cfg.gamma})")
assert replay.width <= cfg.gamma

model = sdseq_to_stm(g, seq)
assert graphs_equal(decode_bruteforce(model), g)
print(f"sequence converts to a model with {model.num_pairs} pairs "
      f"(bound (d+1)(n-1) = {(replay.width + 1) * (n - 1)}) "
      f"that decodes back to the input")
