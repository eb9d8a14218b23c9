#include "triepal/script.hpp"
#include "triepal/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace triepal {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint32_t parse_id(std::string_view tok, std::size_t line) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) throw ParseError(line, "bad node id '" + std::string(tok) + "'");
    return v;
}

Label parse_char(std::string_view tok, std::size_t line) {
    char32_t cp = 0;
    if (tok.size() == 6 && tok[0] == '\\' && tok[1] == 'u') {
        unsigned v = 0;
        auto [p, ec] = std::from_chars(tok.data() + 2, tok.data() + 6, v, 16);
        if (ec != std::errc{} || p != tok.data() + 6) throw ParseError(line, "bad escape '" + std::string(tok) + "'");
        cp = v;
        if (cp >= 0xD800 && cp <= 0xDFFF) throw ParseError(line, "surrogate code point");
    } else {
        std::u32string s;
        try {
            s = from_utf8(tok);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
        if (s.size() != 1) throw ParseError(line, "expected a single character, got '" + std::string(tok) + "'");
        cp = s[0];
    }
    if (cp == 0) throw ParseError(line, "NUL is reserved");
    return Label{cp};
}

} // namespace

std::vector<Op> parse_ops(std::istream& in) {
    std::vector<Op> ops;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
        auto toks = split_ws(s);
        if (toks.empty() || toks[0].front() == '#') continue;
        Op op;
        op.line = line;
        if (toks[0] == "I") {
            if (toks.size() != 3) throw ParseError(line, "expected 'I <parent> <char>'");
            op.kind = 'I';
            op.node = parse_id(toks[1], line);
            op.label = parse_char(toks[2], line);
        } else if (toks[0] == "D") {
            if (toks.size() != 2) throw ParseError(line, "expected 'D <id>'");
            op.kind = 'D';
            op.node = parse_id(toks[1], line);
        } else {
            throw ParseError(line, "unknown operation '" + std::string(toks[0]) + "'");
        }
        ops.push_back(op);
    }
    return ops;
}

std::vector<Op> parse_ops(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_ops(in);
}

std::string format_label(Label a) {
    const char32_t c = a.code;
    if (c > 0x20 && c < 0x7F && c != '#' && c != '\\') return std::string(1, static_cast<char>(c));
    if (c <= 0xFFFF) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
        return buf;
    }
    return to_utf8(a);
}

std::string format_ops(const std::vector<Op>& ops) {
    std::string out;
    for (const Op& op : ops) {
        if (op.kind == 'I')
            out += "I " + std::to_string(op.node) + " " + format_label(op.label) + "\n";
        else
            out += "D " + std::to_string(op.node) + "\n";
    }
    return out;
}

std::string_view shape_name(Shape s) {
    switch (s) {
    case Shape::Path: return "path";
    case Shape::Star: return "star";
    case Shape::Caterpillar: return "caterpillar";
    case Shape::Uniform: return "uniform";
    case Shape::Adversarial: return "adversarial";
    }
    return "?";
}

Shape parse_shape(std::string_view name) {
    for (Shape s : {Shape::Path, Shape::Star, Shape::Caterpillar, Shape::Uniform, Shape::Adversarial})
        if (shape_name(s) == name) return s;
    throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

Label alphabet_letter(std::size_t i) {
    if (i < 26) return Label{static_cast<char32_t>(U'a' + i)};
    return Label{static_cast<char32_t>(0x4E00 + (i - 26))};
}

std::vector<Op> generate_script(const ScriptSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<Op> ops;
    Trie t;
    auto emit_insert = [&](NodeId parent, Label a) {
        NodeId v = t.insert_leaf(parent, a);
        ops.push_back(Op{'I', to_index(parent), a, 0});
        return v;
    };
    auto emit_delete = [&](NodeId v) {
        t.delete_leaf(v);
        ops.push_back(Op{'D', to_index(v), Label{}, 0});
    };

    if (spec.shape == Shape::Adversarial) {
        const std::size_t m = std::max<std::size_t>(1, spec.ops / 2);
        NodeId tip = t.root();
        for (std::size_t i = 0; i < m; ++i) tip = emit_insert(tip, alphabet_letter(0));
        for (std::size_t i = 0; i < m && ops.size() < std::max<std::size_t>(spec.ops, 2); ++i)
            emit_insert(tip, alphabet_letter(i + 1));
        return ops;
    }

    const std::size_t sigma = std::max<std::size_t>(1, spec.sigma);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto chance = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
    auto free_label = [&](NodeId v) -> std::optional<Label> {
        const auto& kids = t.children(v);
        if (kids.size() >= sigma) return std::nullopt;
        Label a = alphabet_letter(pick(sigma));
        while (kids.contains(a)) a = alphabet_letter(pick(sigma));
        return a;
    };
    auto random_leaf = [&]() -> std::optional<NodeId> {
        std::vector<NodeId> leaves;
        for (NodeId v : t.live_nodes())
            if (v != t.root() && t.is_leaf(v)) leaves.push_back(v);
        if (leaves.empty()) return std::nullopt;
        return leaves[pick(leaves.size())];
    };
    auto insert_anywhere = [&]() {
        auto nodes = t.live_nodes();
        std::shuffle(nodes.begin(), nodes.end(), rng);
        for (NodeId v : nodes)
            if (auto a = free_label(v)) {
                emit_insert(v, *a);
                return;
            }
    };

    std::vector<NodeId> spine{t.root()};
    while (ops.size() < spec.ops) {
        const bool del = t.stats().edges > 0 && chance(spec.delete_rate);
        switch (spec.shape) {
        case Shape::Path: {
            NodeId tip = spine.back();
            if (del) {
                emit_delete(tip);
                spine.pop_back();
            } else {
                spine.push_back(emit_insert(tip, alphabet_letter(pick(sigma))));
            }
            break;
        }
        case Shape::Caterpillar: {
            if (del) {
                NodeId v = *random_leaf();
                emit_delete(v);
                if (v == spine.back()) spine.pop_back();
                break;
            }
            if (chance(0.5)) {
                NodeId tip = spine.back();
                if (auto a = free_label(tip)) {
                    spine.push_back(emit_insert(tip, *a));
                    break;
                }
            }
            NodeId s = spine[pick(spine.size())];
            if (s != spine.back() || spine.size() == 1) {
                if (auto a = free_label(s)) {
                    NodeId leg = emit_insert(s, *a);
                    if (spine.size() == 1) spine.push_back(leg);
                    break;
                }
            }
            NodeId tip = spine.back();
            if (auto a = free_label(tip)) spine.push_back(emit_insert(tip, *a));
            else insert_anywhere();
            break;
        }
        case Shape::Star: {
            if (del) {
                emit_delete(*random_leaf());
                break;
            }
            if (auto a = free_label(t.root()); a && chance(0.5)) {
                emit_insert(t.root(), *a);
                break;
            }
            std::vector<NodeId> hubs;
            for (const auto& [c, v] : t.children(t.root())) hubs.push_back(v);
            bool done = false;
            if (!hubs.empty()) {
                NodeId h = hubs[pick(hubs.size())];
                if (auto a = free_label(h)) {
                    emit_insert(h, *a);
                    done = true;
                }
            }
            if (!done) insert_anywhere();
            break;
        }
        case Shape::Uniform:
        case Shape::Adversarial: {
            if (del) {
                emit_delete(*random_leaf());
                break;
            }
            auto nodes = t.live_nodes();
            NodeId v = nodes[pick(nodes.size())];
            if (auto a = free_label(v)) emit_insert(v, *a);
            else insert_anywhere();
            break;
        }
        }
    }
    return ops;
}

std::vector<Event> run_script(Session& session, const std::vector<Op>& ops) {
    std::vector<Event> events;
    events.reserve(ops.size());
    for (const Op& op : ops) events.push_back(op.kind == 'I' ? session.insert(op.node, op.label) : session.remove(op.node));
    return events;
}

bool script_valid(const std::vector<Op>& ops) {
    Trie t;
    try {
        for (const Op& op : ops) {
            if (op.kind == 'I') {
                t.insert_leaf(node_id(op.node), op.label);
            } else {
                if (node_id(op.node) == t.root()) return false;
                t.delete_leaf(node_id(op.node));
            }
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

std::vector<Op> drop_op(const std::vector<Op>& ops, std::size_t index) {
    std::vector<Op> out;
    std::set<std::uint32_t> dead;
    std::map<std::uint32_t, std::uint32_t> renumber{{0, 0}};
    std::uint32_t old_id = 0;
    std::uint32_t new_id = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Op& op = ops[i];
        if (op.kind == 'I') {
            ++old_id;
            if (i == index || dead.contains(op.node)) {
                dead.insert(old_id);
                continue;
            }
            renumber[old_id] = ++new_id;
            Op o = op;
            o.node = renumber.at(op.node);
            out.push_back(o);
        } else {
            if (i == index || dead.contains(op.node)) continue;
            Op o = op;
            auto it = renumber.find(op.node);
            if (it == renumber.end()) return ops;
            o.node = it->second;
            out.push_back(o);
        }
    }
    return out;
}

std::string event_json(const Event& e) {
    nlohmann::ordered_json j;
    j["seq"] = e.seq;
    j["op"] = std::string(1, e.op);
    j["id"] = e.id;
    j["parent"] = e.parent;
    j["label"] = to_utf8(e.label);
    if (e.new_palindrome)
        j["new_palindrome"] = {{"len", e.new_palindrome->len}, {"end", e.new_palindrome->end}};
    else
        j["new_palindrome"] = nullptr;
    if (e.removed_palindrome)
        j["removed_palindrome"] = {{"len", *e.removed_palindrome}};
    else
        j["removed_palindrome"] = nullptr;
    j["n"] = e.n;
    j["l"] = e.l;
    j["h"] = e.h;
    j["d"] = e.d;
    j["maxpal"] = e.maxpal;
    return j.dump();
}

} // namespace triepal
