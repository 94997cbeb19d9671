#pragma once

#include <string_view>
#include <vector>

#include "toulmin/model.hpp"

namespace toulmin {

/// Empty iff the draft would make a valid ProofChain.
std::vector<Diagnostic> validate_chain(const ChainDraft& draft);
/// Always empty; a ProofChain is validated on construction.
std::vector<Diagnostic> validate_chain(const ProofChain& proof);

/// Collapses a chain into one layout for the whole proof:
///   data      first-occurrence union of step data minus intermediate claims
///   warrant   id-deduplicated concatenation of step warrants
///   backing   id-deduplicated concatenation of step backings
///   qualifier meet of the step qualifiers
///   claim     the last step's claim
///   defeaters union, deduplicated by (statement, target)
/// The result has the proof's id and kind regular.
Layout merge_chain(const ProofChain& proof);
/// Throws Error with the validation diagnostics when the draft is not a
/// valid chain.
Layout merge_chain(const ChainDraft& draft);

/// Ids of the steps whose qualifier equals the meet over all steps, in
/// chain order. Never empty.
std::vector<Id> weakest_steps(const ProofChain& proof);

/// A copy of `proof` with one step's warrant, backing and qualifier
/// replaced. Throws Error(unknown-step), Error(empty-field) for an empty
/// warrant, or Error(scale-mismatch) for a qualifier off the proof's scale.
ProofChain substitute_step(const ProofChain& proof, std::string_view step_id,
                           std::vector<Id> warrant, std::vector<Id> backing,
                           const Qualifier& qualifier);

}  // namespace toulmin
