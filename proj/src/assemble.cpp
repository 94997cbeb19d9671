#include <map>
#include <set>

#include "toulmin/dsl.hpp"

namespace toulmin {

namespace {

// Fills in `span` for diagnostics raised by in-memory checks, which do not
// know where their input came from.
std::vector<Diagnostic> located(std::vector<Diagnostic> diagnostics, SourceSpan span) {
  for (auto& d : diagnostics) {
    if (d.span == SourceSpan{}) d.span = span;
  }
  return diagnostics;
}

class Assembler {
 public:
  explicit Assembler(const DocumentDraft& draft) : draft_(draft) {}

  Outcome<Document> run() {
    scales();
    statements();
    layouts();
    proofs();
    graphs();
    Outcome<Document> result;
    result.diagnostics = std::move(diagnostics_);
    if (has_errors(result.diagnostics)) return result;
    try {
      result.value.emplace(std::move(parts_));
    } catch (const Error& e) {
      for (const auto& d : e.diagnostics()) result.diagnostics.push_back(d);
    }
    return result;
  }

 private:
  void report(std::vector<Diagnostic> diagnostics, SourceSpan span) {
    for (auto& d : located(std::move(diagnostics), span)) diagnostics_.push_back(std::move(d));
  }

  void report(std::string_view code, std::string message, SourceSpan span,
              std::string subject = {}) {
    diagnostics_.push_back(make_error(code, std::move(message), span, std::move(subject)));
  }

  bool unique(std::set<std::string>& seen, const Ref& id, std::string_view what) {
    if (seen.insert(id.id).second) return true;
    report(codes::duplicate_id, std::string(what) + " '" + id.id + "' is declared twice", id.span,
           id.id);
    return false;
  }

  void scales() {
    std::set<std::string> seen;
    for (const auto& draft : draft_.scales) {
      if (!unique(seen, draft.name, "scale")) continue;
      std::vector<std::string> levels;
      std::set<std::string> level_names;
      bool ok = true;
      for (const auto& level : draft.levels) {
        if (!level_names.insert(level.id).second) {
          report(codes::duplicate_level,
                 "scale '" + draft.name.id + "' lists level '" + level.id + "' twice", level.span,
                 draft.name.id);
          ok = false;
        }
        levels.push_back(level.id);
      }
      if (!ok) continue;
      try {
        parts_.scales.emplace_back(draft.name.id, std::move(levels));
      } catch (const Error& e) {
        report(e.diagnostics(), draft.name.span);
      }
    }
  }

  void statements() {
    std::set<std::string> seen;
    for (const auto& draft : draft_.statements) {
      if (!unique(seen, draft.id, "statement")) continue;
      try {
        parts_.statements.emplace_back(draft.id.id, draft.text);
        statement_ids_.insert(draft.id.id);
      } catch (const Error& e) {
        report(e.diagnostics(), draft.id.span);
      }
    }
  }

  // Declared scale by name, else the built-in one under its own name.
  const QualifierScale* scale_named(std::string_view name) const {
    for (const auto& s : parts_.scales) {
      if (s.name() == name) return &s;
    }
    if (name == QualifierScale::builtin_name) return &QualifierScale::builtin();
    return nullptr;
  }

  const QualifierScale& document_default_scale() const {
    if (draft_.scales.size() == 1 && parts_.scales.size() == 1) return parts_.scales.front();
    return QualifierScale::builtin();
  }

  const QualifierScale* resolve_scale_ref(const Ref& ref) {
    const auto* scale = scale_named(ref.id);
    if (!scale) report(codes::unknown_reference, "unknown scale '" + ref.id + "'", ref.span);
    return scale;
  }

  void check_ref(const Ref& ref) {
    if (!statement_ids_.contains(ref.id)) {
      report(codes::unknown_reference, "unknown statement '" + ref.id + "'", ref.span, ref.id);
    }
  }

  std::optional<Body> body(const BodyDraft& draft, const Ref& owner,
                           const QualifierScale& default_scale) {
    const std::size_t before = diagnostics_.size();
    std::vector<Id> data, warrant, backing;
    for (const auto& [refs, out] : {std::pair{&draft.data, &data}, std::pair{&draft.warrant, &warrant},
                                    std::pair{&draft.backing, &backing}}) {
      for (const auto& ref : *refs) {
        check_ref(ref);
        out->push_back(ref.id);
      }
    }
    std::vector<Defeater> defeaters;
    for (const auto& d : draft.defeaters) {
      check_ref(d.statement);
      defeaters.push_back({d.statement.id, d.target});
    }
    if (draft.claim) check_ref(*draft.claim);
    else report(codes::missing_field, "'" + owner.id + "' has no claim", owner.span, owner.id);

    std::optional<Qualifier> qualifier;
    if (!draft.qualifier) {
      report(codes::missing_field, "'" + owner.id + "' has no qualifier", owner.span, owner.id);
    } else {
      const auto& q = *draft.qualifier;
      const QualifierScale* scale =
          q.scale ? resolve_scale_ref(*q.scale) : &default_scale;
      if (scale) {
        if (scale->rank_of(q.level.id)) {
          qualifier.emplace(*scale, q.level.id);
        } else {
          report(codes::bad_qualifier,
                 "level '" + q.level.id + "' is not on scale '" + scale->name() + "'",
                 q.level.span, owner.id);
        }
      }
    }
    if (!qualifier || !draft.claim) return std::nullopt;

    Body body{std::move(data), std::move(warrant), std::move(backing), *qualifier,
              draft.claim->id, std::move(defeaters)};
    report(check_body(body, owner.id), owner.span);
    if (diagnostics_.size() != before) return std::nullopt;
    return body;
  }

  void layouts() {
    std::set<std::string> seen;
    for (const auto& draft : draft_.layouts) {
      if (!unique(seen, draft.id, "layout")) continue;
      auto resolved = body(draft.body, draft.id, document_default_scale());
      if (!resolved) continue;
      try {
        parts_.layouts.emplace_back(draft.id.id, draft.kind, std::move(*resolved));
      } catch (const Error& e) {
        report(e.diagnostics(), draft.id.span);
      }
    }
  }

  void proofs() {
    std::set<std::string> seen;
    for (const auto& draft : draft_.proofs) {
      if (!unique(seen, draft.id, "proof")) continue;
      const QualifierScale* scale =
          draft.scale ? resolve_scale_ref(*draft.scale) : &document_default_scale();
      if (!scale) continue;

      ChainDraft chain{draft.id.id, *scale, {}};
      std::map<std::string, SourceSpan> spans{{draft.id.id, draft.id.span}};
      bool ok = true;
      for (const auto& step : draft.steps) {
        spans.emplace(step.id.id, step.id.span);
        auto resolved = body(step.body, step.id, *scale);
        if (!resolved) {
          ok = false;
          continue;
        }
        try {
          chain.steps.emplace_back(step.id.id, std::move(*resolved));
        } catch (const Error& e) {
          report(e.diagnostics(), step.id.span);
          ok = false;
        }
      }
      if (!ok) continue;

      auto problems = check_chain(chain);
      if (!problems.empty()) {
        for (auto& d : problems) {
          auto it = spans.find(d.subject);
          d.span = it != spans.end() ? it->second : draft.id.span;
          // A repeated step id maps to the first one; point at the repeat.
          if (d.code == codes::duplicate_id) {
            int seen_count = 0;
            for (const auto& s : draft.steps) {
              if (s.id.id == d.subject && ++seen_count == 2) d.span = s.id.span;
            }
          }
          diagnostics_.push_back(std::move(d));
        }
        continue;
      }
      parts_.proofs.emplace_back(std::move(chain));
    }
  }

  void graphs() {
    std::set<std::string> seen;
    for (const auto& decl : draft_.graphs) {
      if (!unique(seen, decl.name, "graph")) continue;
      auto built = build_graph(decl);
      for (auto& d : built.diagnostics) diagnostics_.push_back(std::move(d));
      if (built) parts_.graphs.push_back(std::move(*built.value));
    }
  }

  const DocumentDraft& draft_;
  DocumentParts parts_;
  std::set<std::string> statement_ids_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

Outcome<Document> assemble(const DocumentDraft& draft) { return Assembler(draft).run(); }

}  // namespace toulmin
