// Build-time guard: a transcription of H that breaks its structural
// invariants fails the build.

#include <cstdio>

#include "listfold/gadget.hpp"

int main() {
  using namespace listfold;
  try {
    const GadgetH h = build_H(FoldParams::of(1));
    const auto d = degeneracy_order(h.graph);
    const auto emb = check_embedding(h.graph, h.embedding);
    const auto g = girth(h.graph);
    if (d.degeneracy > 3) {
      std::fprintf(stderr, "gadget H: degeneracy %d exceeds 3\n", d.degeneracy);
      return 1;
    }
    std::printf("gadget H: %d vertices, %d edges, girth %d, degeneracy %d, %d faces\n", h.graph.order(),
                h.graph.size(), g.value_or(0), d.degeneracy, emb.faces);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gadget H: %s\n", e.what());
    return 1;
  }
  return 0;
}
