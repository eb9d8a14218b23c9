#pragma once

#include "triepal/engine.hpp"
#include "triepal/label.hpp"

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace triepal {

/// One line of an ops file: `I <parent> <char>` or `D <id>`.
struct Op {
    char kind = 'I';
    std::uint32_t node = 0;  // parent for I, target for D
    Label label;
    std::size_t line = 0;

    friend bool operator==(const Op& a, const Op& b) {
        return a.kind == b.kind && a.node == b.node && a.label == b.label;
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

std::vector<Op> parse_ops(std::istream& in);
std::vector<Op> parse_ops(std::string_view text);
std::string format_ops(const std::vector<Op>& ops);
/// Character token as written in ops files (\uXXXX for whitespace, '#',
/// backslash and anything outside printable ASCII).
std::string format_label(Label a);

enum class Shape { Path, Star, Caterpillar, Uniform, Adversarial };
std::string_view shape_name(Shape s);
/// Throws std::invalid_argument.
Shape parse_shape(std::string_view name);

struct ScriptSpec {
    std::uint64_t seed = 1;
    std::size_t ops = 200;
    std::size_t sigma = 2;
    Shape shape = Shape::Uniform;
    double delete_rate = 0.2;  // ignored for the adversarial shape
};

/// The i-th letter of the generator alphabet ('a', 'b', ... then CJK block).
Label alphabet_letter(std::size_t i);

/// Random valid script. The adversarial shape builds a^m and then hangs m
/// fresh-labeled leaves under its deepest node (m = ops / 2).
std::vector<Op> generate_script(const ScriptSpec& spec);

/// Replays ops; stops at the first failing op and rethrows.
std::vector<Event> run_script(Session& session, const std::vector<Op>& ops);

/// True when the script replays without errors on a bare trie.
bool script_valid(const std::vector<Op>& ops);

/// Greedy reduction: repeatedly drops an op (and every op depending on a
/// dropped insertion, with ids renumbered) while `still_fails` holds.
template <class Pred>
std::vector<Op> minimize_script(std::vector<Op> ops, Pred still_fails);

std::vector<Op> drop_op(const std::vector<Op>& ops, std::size_t index);

/// JSON line for an event (no trailing newline).
std::string event_json(const Event& e);

template <class Pred>
std::vector<Op> minimize_script(std::vector<Op> ops, Pred still_fails) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = ops.size(); i-- > 0;) {
            if (i >= ops.size()) continue;
            auto candidate = drop_op(ops, i);
            if (candidate.size() == ops.size() || !script_valid(candidate)) continue;
            if (still_fails(candidate)) {
                ops = std::move(candidate);
                changed = true;
            }
        }
    }
    return ops;
}

} // namespace triepal
