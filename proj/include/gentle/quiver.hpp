#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

/// One arrow of a quiver. Source and target may coincide (a loop).
struct Arrow {
    std::string label;
    VertexId source = 0;
    VertexId target = 0;
};

/// Finite quiver with labelled vertices and arrows.
///
/// Ids are dense indices assigned in declaration order, so iteration by id
/// is deterministic for a given input. Vertex labels and arrow labels live
/// in separate namespaces; each must be unique within its own.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::string name) : name_(std::move(name)) {}

    /// Throws DuplicateLabelError if the label is already a vertex.
    VertexId add_vertex(std::string label);

    /// Throws DuplicateLabelError / UnknownEndpointError.
    ArrowId add_arrow(std::string label, std::string_view source, std::string_view target);
    ArrowId add_arrow(std::string label, VertexId source, VertexId target);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t vertex_count() const { return vertex_labels_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    const std::string& vertex_label(VertexId v) const { return vertex_labels_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

    std::optional<VertexId> find_vertex(std::string_view label) const;
    std::optional<ArrowId> find_arrow(std::string_view label) const;

    /// Arrows leaving / entering a vertex, in arrow-id order. A loop shows
    /// up once in each list.
    const std::vector<ArrowId>& arrows_out(VertexId v) const { return out_.at(v); }
    const std::vector<ArrowId>& arrows_in(VertexId v) const { return in_.at(v); }

    /// Connectivity of the underlying undirected graph. An empty quiver
    /// counts as connected.
    bool connected() const;

private:
    std::string name_ = "quiver";
    std::vector<std::string> vertex_labels_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<ArrowId>> out_;
    std::vector<std::vector<ArrowId>> in_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, ArrowId> arrow_index_;
};

/// Length-two zero relation: doing `first` and then `second` is zero in
/// the path algebra. Requires source(second) == target(first).
struct Relation {
    ArrowId second = 0;
    ArrowId first = 0;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// One violation found by validate_gentle. `code` is a stable machine
/// readable tag; `message` names the offending vertices and arrows.
struct ValidationIssue {
    std::string code;
    std::string message;
};

/// Raised when a presentation fails validation; carries the full issue list.
class ValidationError : public Error {
public:
    ValidationError(const std::string& msg, std::vector<ValidationIssue> issues)
        : Error(msg), issues_(std::move(issues)) {}

    const std::vector<ValidationIssue>& issues() const { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

/// Checks every axiom a gentle presentation must satisfy and returns the
/// complete list of violations (empty means valid):
///   - at least one vertex, connected underlying graph
///   - relations reference existing arrows, compose head to tail, and are
///     pairwise distinct
///   - every vertex has at most two incoming and two outgoing arrows
///   - every arrow has at most one relation-free successor/predecessor and
///     at most one relation successor/predecessor
///   - no directed cycle of relation-free compositions (these would make
///     the algebra infinite dimensional)
std::vector<ValidationIssue> validate_gentle(const Quiver& quiver,
                                             const std::vector<Relation>& relations);

/// A validated gentle presentation. Instances only exist for input that
/// passed validate_gentle, so downstream code may rely on the axioms.
class GentlePresentation {
public:
    /// Throws NonComposableRelationError for a structurally broken relation
    /// and ValidationError (with the full issue list) otherwise.
    static GentlePresentation build(Quiver quiver, std::vector<Relation> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }

    bool in_relations(ArrowId second, ArrowId first) const;

    /// Unique arrow b composing after a with (b, a) relation free, if any.
    std::optional<ArrowId> permitted_successor(ArrowId a) const;
    std::optional<ArrowId> permitted_predecessor(ArrowId a) const;

    /// Unique arrow b with (b, a) in the relation set, if any.
    std::optional<ArrowId> relation_successor(ArrowId a) const;
    std::optional<ArrowId> relation_predecessor(ArrowId a) const;

    /// First Betti number of the underlying graph: #arrows - #vertices + 1.
    std::size_t cycle_number() const;

private:
    GentlePresentation() = default;

    static constexpr ArrowId kNone = static_cast<ArrowId>(-1);

    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<ArrowId> perm_succ_;
    std::vector<ArrowId> perm_pred_;
    std::vector<ArrowId> rel_succ_;
    std::vector<ArrowId> rel_pred_;
};

/// Convenience wrapper around GentlePresentation::build.
inline GentlePresentation build_presentation(Quiver quiver, std::vector<Relation> relations) {
    return GentlePresentation::build(std::move(quiver), std::move(relations));
}

}  // namespace gentle
