#pragma once

#include <string>
#include <vector>

/// Exhaustive finite-model checks of the categorical laws.
namespace ctlhom::laws {

struct LawSection {
  std::string key;
  std::string title;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
  double seconds = 0;
};

struct LawReport {
  std::vector<LawSection> sections;
  double seconds = 0;

  bool ok() const;
};

/// (a) control-structure axioms for every generated presentation on carriers
/// of size <= max_carrier; (b) unit and associativity laws, closure of
/// composition, full faithfulness of MinCtl and MaxCtl; (c) the MinCtl -|
/// Forget bijection; (d) cosimplicial identities up to dimension 6; (e)
/// uniqueness of epi-mono factorizations up to arity 4; (f) the 0-simplex
/// reduction of adjacency against the arrow definition (arrows of dimension
/// <= 3) on corpus complexes.
LawReport run_laws(int max_carrier = 3);

LawSection control_structure_axioms(int max_carrier);
LawSection category_laws(int max_carrier);
LawSection adjunction_laws(int max_carrier);
LawSection cosimplicial_laws(int max_dim = 6);
LawSection factorization_laws(int max_arity = 4);
LawSection adjacency_laws(int max_dim = 3);

}  // namespace ctlhom::laws
