#include "toulmin/model.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace toulmin {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '.'; });
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    char32_t code = 0;
    if (lead < 0x80) {
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      code = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      code = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      code = lead & 0x07;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto next = static_cast<unsigned char>(text[i + k]);
      if ((next & 0xC0) != 0x80) return false;
      code = (code << 6) | (next & 0x3F);
    }
    static constexpr std::array<char32_t, 4> min_code{0, 0x80, 0x800, 0x10000};
    if (code < min_code[extra] || code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

namespace {

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  });
}

void require_identifier(std::vector<Diagnostic>& out, std::string_view id,
                        std::string_view what, std::string_view subject) {
  if (!is_identifier(id)) {
    out.push_back(make_error(codes::bad_identifier,
                             std::string(what) + " '" + std::string(id) +
                                 "' is not a valid identifier",
                             {}, std::string(subject)));
  }
}

void throw_if_any(std::vector<Diagnostic> diagnostics) {
  if (!diagnostics.empty()) throw Error(std::move(diagnostics));
}

}  // namespace

Statement::Statement(Id id, std::string text) : id_(std::move(id)), text_(std::move(text)) {
  std::vector<Diagnostic> problems;
  require_identifier(problems, id_, "statement id", id_);
  if (!is_valid_utf8(text_)) {
    problems.push_back(make_error(codes::bad_utf8, "statement '" + id_ + "' text is not UTF-8",
                                  {}, id_));
  } else if (blank(text_)) {
    problems.push_back(
        make_error(codes::empty_text, "statement '" + id_ + "' has empty text", {}, id_));
  }
  throw_if_any(std::move(problems));
}

QualifierScale::QualifierScale(Id name, std::vector<std::string> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {
  std::vector<Diagnostic> problems;
  require_identifier(problems, name_, "scale name", name_);
  if (levels_.empty()) {
    problems.push_back(
        make_error(codes::empty_scale, "scale '" + name_ + "' has no levels", {}, name_));
  }
  std::set<std::string_view> seen;
  for (const auto& level : levels_) {
    require_identifier(problems, level, "level", name_);
    if (!seen.insert(level).second) {
      problems.push_back(make_error(codes::duplicate_level,
                                    "scale '" + name_ + "' lists level '" + level + "' twice",
                                    {}, name_));
    }
  }
  throw_if_any(std::move(problems));
}

const QualifierScale& QualifierScale::builtin() {
  static const QualifierScale scale{
      std::string(builtin_name),
      {"necessary", "constructive", "classical", "almost_certain", "plausible",
       "in_light_of_facts"}};
  return scale;
}

std::optional<std::size_t> QualifierScale::rank_of(std::string_view level) const {
  auto it = std::find(levels_.begin(), levels_.end(), level);
  if (it == levels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - levels_.begin());
}

Qualifier::Qualifier(QualifierScale scale, std::size_t rank)
    : scale_(std::move(scale)), rank_(rank) {}

Qualifier::Qualifier(QualifierScale scale, std::string_view level)
    : scale_(std::move(scale)), rank_(0) {
  auto rank = scale_.rank_of(level);
  if (!rank) {
    throw Error(codes::bad_qualifier, "level '" + std::string(level) +
                                          "' is not on scale '" + scale_.name() + "'");
  }
  rank_ = *rank;
}

Qualifier Qualifier::at_rank(QualifierScale scale, std::size_t rank) {
  if (rank >= scale.size()) {
    throw Error(codes::bad_qualifier, "rank " + std::to_string(rank) +
                                          " is past the end of scale '" + scale.name() + "'");
  }
  return Qualifier(std::move(scale), rank);
}

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::stronger: return "stronger";
    case Ordering::equal: return "equal";
    case Ordering::weaker: return "weaker";
  }
  return "equal";
}

Ordering compare(const Qualifier& lhs, const Qualifier& rhs) {
  if (lhs.scale() != rhs.scale()) {
    throw Error(codes::incomparable_qualifiers,
                "incomparable qualifiers: '" + lhs.level() + "' on scale '" +
                    lhs.scale().name() + "' and '" + rhs.level() + "' on scale '" +
                    rhs.scale().name() + "'");
  }
  if (lhs.rank() < rhs.rank()) return Ordering::stronger;
  if (lhs.rank() > rhs.rank()) return Ordering::weaker;
  return Ordering::equal;
}

Qualifier meet(std::span<const Qualifier> qualifiers) {
  if (qualifiers.empty()) throw Error(codes::empty_meet, "meet of an empty qualifier list");
  const Qualifier* weakest = &qualifiers.front();
  for (const auto& q : qualifiers.subspan(1)) {
    if (compare(q, *weakest) == Ordering::weaker) weakest = &q;
  }
  return *weakest;
}

std::string_view to_string(DefeaterTarget target) {
  switch (target) {
    case DefeaterTarget::conclusion: return "conclusion";
    case DefeaterTarget::inference: return "inference";
    case DefeaterTarget::both: return "both";
  }
  return "both";
}

std::string_view to_string(ArgumentKind kind) {
  return kind == ArgumentKind::regular ? "regular" : "critical";
}

std::optional<DefeaterTarget> parse_defeater_target(std::string_view text) {
  if (text == "conclusion") return DefeaterTarget::conclusion;
  if (text == "inference") return DefeaterTarget::inference;
  if (text == "both") return DefeaterTarget::both;
  return std::nullopt;
}

std::optional<ArgumentKind> parse_argument_kind(std::string_view text) {
  if (text == "regular") return ArgumentKind::regular;
  if (text == "critical") return ArgumentKind::critical;
  return std::nullopt;
}

std::vector<Diagnostic> check_body(const Body& body, std::string_view owner) {
  std::vector<Diagnostic> out;
  const std::string who(owner);
  auto check_field = [&](const std::vector<Id>& ids, std::string_view field) {
    std::set<std::string_view> seen;
    for (const auto& id : ids) {
      require_identifier(out, id, std::string(field) + " reference", who);
      if (!seen.insert(id).second) {
        out.push_back(make_error(codes::duplicate_reference,
                                 "'" + who + "' lists '" + id + "' twice in " +
                                     std::string(field),
                                 {}, who));
      }
    }
  };
  if (body.data.empty()) {
    out.push_back(make_error(codes::empty_field, "'" + who + "' has no data", {}, who));
  }
  if (body.warrant.empty()) {
    out.push_back(make_error(codes::empty_field, "'" + who + "' has no warrant", {}, who));
  }
  check_field(body.data, "data");
  check_field(body.warrant, "warrant");
  check_field(body.backing, "backing");
  require_identifier(out, body.claim, "claim reference", who);
  if (std::find(body.data.begin(), body.data.end(), body.claim) != body.data.end()) {
    out.push_back(make_error(codes::self_support,
                             "'" + who + "' lists its claim '" + body.claim + "' among its data",
                             {}, who));
  }
  std::set<std::pair<std::string_view, DefeaterTarget>> defeaters;
  for (const auto& d : body.defeaters) {
    require_identifier(out, d.statement, "defeater reference", who);
    if (!defeaters.emplace(d.statement, d.target).second) {
      out.push_back(make_error(codes::duplicate_reference,
                               "'" + who + "' lists defeater '" + d.statement + "' targeting " +
                                   std::string(to_string(d.target)) + " twice",
                               {}, who));
    }
  }
  return out;
}

Layout::Layout(Id id, ArgumentKind kind, Body body)
    : id_(std::move(id)), kind_(kind), body_(std::move(body)) {
  auto problems = check_body(body_, id_);
  require_identifier(problems, id_, "layout id", id_);
  throw_if_any(std::move(problems));
}

Step::Step(Id id, Body body) : id_(std::move(id)), body_(std::move(body)) {
  auto problems = check_body(body_, id_);
  require_identifier(problems, id_, "step id", id_);
  throw_if_any(std::move(problems));
}

std::vector<Diagnostic> check_chain(const ChainDraft& draft) {
  std::vector<Diagnostic> out;
  require_identifier(out, draft.id, "proof id", draft.id);
  if (draft.steps.empty()) {
    out.push_back(make_error(codes::empty_proof, "proof '" + draft.id + "' has no steps", {},
                             draft.id));
    return out;
  }
  const auto& steps = draft.steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& step = steps[i];
    const Body& body = step.body();
    for (std::size_t j = 0; j < i; ++j) {
      if (steps[j].id() == step.id()) {
        out.push_back(make_error(codes::duplicate_id,
                                 "proof '" + draft.id + "' has two steps named '" + step.id() + "'",
                                 {}, step.id()));
      }
    }
    if (body.qualifier.scale() != draft.scale) {
      out.push_back(make_error(codes::scale_mismatch,
                               "step '" + step.id() + "' qualifier is on scale '" +
                                   body.qualifier.scale().name() + "', proof '" + draft.id +
                                   "' uses scale '" + draft.scale.name() + "'",
                               {}, step.id()));
    }
    if (i > 0) {
      const Step& previous = steps[i - 1];
      const auto& data = body.data;
      if (std::find(data.begin(), data.end(), previous.body().claim) == data.end()) {
        out.push_back(make_error(codes::chain_break,
                                 "step '" + step.id() + "' does not take the claim '" +
                                     previous.body().claim + "' of step '" + previous.id() +
                                     "' as data",
                                 {}, step.id()));
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Body& earlier = steps[j].body();
      if (earlier.claim == body.claim) {
        out.push_back(make_error(codes::claim_reuse,
                                 "step '" + step.id() + "' claims '" + body.claim +
                                     "', already the claim of step '" + steps[j].id() + "'",
                                 {}, step.id()));
      }
      if (std::find(earlier.data.begin(), earlier.data.end(), body.claim) != earlier.data.end()) {
        out.push_back(make_error(codes::circular_data,
                                 "step '" + step.id() + "' claims '" + body.claim +
                                     "', which earlier step '" + steps[j].id() +
                                     "' already uses as data",
                                 {}, step.id()));
      }
    }
  }
  return out;
}

ProofChain::ProofChain(ChainDraft draft)
    : id_(std::move(draft.id)), scale_(std::move(draft.scale)), steps_(std::move(draft.steps)) {
  throw_if_any(check_chain(to_draft()));
}

const Step* ProofChain::find_step(std::string_view step_id) const {
  auto it = std::find_if(steps_.begin(), steps_.end(),
                         [&](const Step& s) { return s.id() == step_id; });
  return it == steps_.end() ? nullptr : &*it;
}

}  // namespace toulmin
