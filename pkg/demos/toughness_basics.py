"""Toughness of small hypergraphs, exactly.

Toughness measures how hard a structure is to shatter: the minimum of
|S| / c(H - S) over vertex sets S whose *strong* deletion (S plus every
edge touching S) leaves at least two components.  Complete structures
cannot be disconnected at all, so their toughness is infinite.

Run with:  python3 demos/toughness_basics.py
"""

from bergefactor import components, families, strong_delete, toughness


def show(name, h):
    t = toughness(h)
    wit = "-" if t.witness is None else "{" + ",".join(map(str, t.witness)) + "}"
    print(f"  {name:<22} tau = {t!s:<9} witness {wit}")


def main():
    print("exact toughness with optimal cutsets:")
    show("cycle C4", families.cycle(4))
    show("cycle C7", families.cycle(7))
    show("star K_{1,3}", families.star(3))
    show("complete K4", families.complete_graph(4))
    show("complete 3-uniform K4", families.complete_uniform(4, 3))
    show("Petersen graph", families.petersen())

    # Strong deletion removes the chosen vertices and every incident
    # edge; for the star, removing the center strands all three leaves.
    star = families.star(3)
    sd = strong_delete(star, [0])
    print()
    print("strong deletion of the star's center:")
    print(f"  survivors: {sd.hypergraph.n} vertices, "
          f"{len(sd.hypergraph.edges)} edges")
    print(f"  old->new vertex map: {sd.vertex_map}")

    # The minimizing witness explains the value: one deleted vertex,
    # three stranded leaves, so tau = 1/3.
    t = toughness(star)
    after = strong_delete(star, t.witness)
    c = len(components(after.hypergraph))
    print()
    print(f"witness check for the star: |S| = {len(t.witness)}, "
          f"components after deletion = {c}, ratio = {len(t.witness)}/{c}")


if __name__ == "__main__":
    main()
