"""Print the world views of the small bundled programs under every compared semantics."""

from worldviews import corpus
from worldviews.epistemic import format_world_view
from worldviews.semantics import COMPARED_SEMANTICS, world_views

for name in ("P1", "P2", "P3", "P3c", "P4", "P5", "P6", "P10"):
    print(f"{name}: {corpus.ENTRIES[name].description}")
    print("   " + corpus.emit(name).strip().replace("\n", "\n   "))
    for s in COMPARED_SEMANTICS:
        views = world_views(corpus.load(name), s)
        shown = " ".join(format_world_view(w) for w in views) or "(none)"
        print(f"   {s:>4}: {shown}")
    print()
