#include "toulmin/composer.hpp"

#include <algorithm>
#include <set>

namespace toulmin {

namespace {

void append_unique(std::vector<Id>& out, std::set<Id>& seen, const std::vector<Id>& ids) {
  for (const auto& id : ids) {
    if (seen.insert(id).second) out.push_back(id);
  }
}

std::vector<Qualifier> step_qualifiers(const ProofChain& proof) {
  std::vector<Qualifier> qualifiers;
  for (const auto& step : proof.steps()) qualifiers.push_back(step.body().qualifier);
  return qualifiers;
}

}  // namespace

std::vector<Diagnostic> validate_chain(const ChainDraft& draft) { return check_chain(draft); }

std::vector<Diagnostic> validate_chain(const ProofChain& proof) {
  return check_chain(proof.to_draft());
}

Layout merge_chain(const ProofChain& proof) {
  const auto& steps = proof.steps();

  std::set<Id> intermediate;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) intermediate.insert(steps[i].body().claim);

  std::vector<Id> data, warrant, backing;
  std::set<Id> seen_data = intermediate, seen_warrant, seen_backing;
  std::vector<Defeater> defeaters;
  for (const auto& step : steps) {
    const Body& body = step.body();
    append_unique(data, seen_data, body.data);
    append_unique(warrant, seen_warrant, body.warrant);
    append_unique(backing, seen_backing, body.backing);
    for (const auto& d : body.defeaters) {
      if (std::find(defeaters.begin(), defeaters.end(), d) == defeaters.end()) {
        defeaters.push_back(d);
      }
    }
  }

  const auto qualifiers = step_qualifiers(proof);
  return Layout(proof.id(), ArgumentKind::regular,
                Body{std::move(data), std::move(warrant), std::move(backing), meet(qualifiers),
                     steps.back().body().claim, std::move(defeaters)});
}

Layout merge_chain(const ChainDraft& draft) {
  auto problems = validate_chain(draft);
  if (!problems.empty()) throw Error(std::move(problems));
  return merge_chain(ProofChain(draft));
}

std::vector<Id> weakest_steps(const ProofChain& proof) {
  const auto qualifiers = step_qualifiers(proof);
  const Qualifier weakest = meet(qualifiers);
  std::vector<Id> ids;
  for (const auto& step : proof.steps()) {
    if (compare(step.body().qualifier, weakest) == Ordering::equal) ids.push_back(step.id());
  }
  return ids;
}

ProofChain substitute_step(const ProofChain& proof, std::string_view step_id,
                           std::vector<Id> warrant, std::vector<Id> backing,
                           const Qualifier& qualifier) {
  if (!proof.find_step(step_id)) {
    throw Error(codes::unknown_step,
                "proof '" + proof.id() + "' has no step '" + std::string(step_id) + "'");
  }
  if (warrant.empty()) {
    throw Error(codes::empty_field, "substituted warrant for step '" + std::string(step_id) +
                                        "' is empty");
  }
  if (qualifier.scale() != proof.scale()) {
    throw Error(codes::scale_mismatch, "qualifier '" + qualifier.level() + "' is on scale '" +
                                           qualifier.scale().name() + "', proof '" + proof.id() +
                                           "' uses scale '" + proof.scale().name() + "'");
  }
  ChainDraft draft = proof.to_draft();
  for (auto& step : draft.steps) {
    if (step.id() != step_id) continue;
    Body body = step.body();
    body.warrant = std::move(warrant);
    body.backing = std::move(backing);
    body.qualifier = qualifier;
    step = Step(step.id(), std::move(body));
  }
  return ProofChain(std::move(draft));
}

}  // namespace toulmin
