"""Find the conformant plan of the Yale shooting encoding and show why the prefix plan fails."""

import time

from worldviews import corpus, ht
from worldviews.semantics import SolveConfig, world_views
from worldviews.syntax import Atom, parse_program

config = SolveConfig(max_atoms=26)

start = time.perf_counter()
(view,) = world_views(corpus.load("P8"), "g94", config)
actions = sorted({str(l) for s in view for l in s if str(l).startswith(("load(", "trigger("))})
print(f"plan known in every belief set: {', '.join(actions)}  ({time.perf_counter() - start:.1f}s)")
print(f"belief sets (one per initial state): {len(view)}")

defined = corpus.yale_shooting(3, plan=["load(1)", "trigger(2)"])
define_only = "\n".join(l for l in defined.splitlines() if not l.startswith(":-"))
models = ht.stable_models(parse_program(define_only))
bad = [m for m in models if Atom("impossible") in m]
print(f"prefix plan load(1), trigger(2): {len(models)} stable models, {len(bad)} contain impossible")
print(f"world views of the prefix plan with the tests: {len(world_views(corpus.load('P8v'), 'g94', config))}")
