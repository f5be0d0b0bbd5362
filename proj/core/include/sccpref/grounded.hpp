#pragma once

#include "sccpref/argument_set.hpp"
#include "sccpref/framework.hpp"
#include "sccpref/labelling.hpp"

namespace sccpref {

struct GroundedOutcome {
  Labelling decided;      // arguments labelled in or out
  ArgumentSet undecided;  // the rest
};

// Grounded labelling of `af` in `c`: the least fixpoint of labelling in every
// member of c whose attackers are all out, and out every argument with an in
// attacker. Arguments outside c may become out but never in.
GroundedOutcome grounded_in(const ArgumentationFramework& af, const ArgumentSet& c);

}  // namespace sccpref
