#include "triepal/check.hpp"
#include "triepal/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace triepal {

namespace {

struct Run {
    std::vector<Event> events;
    std::optional<std::string> error;  // errc text of a failing op
};

Run replay(EngineKind kind, const std::vector<Op>& ops, SessionOptions opts) {
    Run r;
    auto s = Session::open(kind, opts);
    for (const Op& op : ops) {
        try {
            r.events.push_back(op.kind == 'I' ? s->insert(op.node, op.label) : s->remove(op.node));
        } catch (const Error& e) {
            r.error = e.what();
            break;
        }
    }
    return r;
}

std::optional<std::pair<std::size_t, std::string>> diverge(const Run& want, const Run& got) {
    const std::size_t n = std::min(want.events.size(), got.events.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!(want.events[i] == got.events[i]))
            return std::make_pair(i, "expected " + event_json(want.events[i]) + " got " + event_json(got.events[i]));
    if (want.events.size() != got.events.size() || want.error != got.error)
        return std::make_pair(n, "expected error '" + want.error.value_or("none") + "' got '" + got.error.value_or("none") + "'");
    return std::nullopt;
}

std::string q(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string show(std::u32string_view s) { return to_utf8(s); }

} // namespace

CheckResult check_script(const std::vector<Op>& ops, const CheckOptions& options) {
    CheckResult res;
    const Run want = replay(EngineKind::Oracle, ops, {});
    for (EngineKind k : options.engines) {
        const Run got = replay(k, ops, options.session);
        auto d = diverge(want, got);
        if (!d) continue;
        res.ok = false;
        res.engine = k;
        res.op_index = d->first;
        res.detail = d->second;
        if (options.minimize) {
            res.reproducer = minimize_script(ops, [&](const std::vector<Op>& cand) {
                return diverge(replay(EngineKind::Oracle, cand, {}), replay(k, cand, options.session)).has_value();
            });
        } else {
            res.reproducer = ops;
        }
        return res;
    }
    return res;
}

std::string export_dot(const Session& s, std::string_view target) {
    std::ostringstream os;
    const Trie& t = s.trie();
    const bool empty = t.stats().edges == 0;
    if (target == "trie") {
        os << "digraph trie {\n";
        if (!empty) {
            for (NodeId v : t.live_nodes()) os << "  n" << to_index(v) << " [label=" << q(std::to_string(to_index(v))) << "];\n";
            for (NodeId v : t.live_nodes())
                for (const auto& [c, w] : t.children(v))
                    os << "  n" << to_index(v) << " -> n" << to_index(w) << " [label=" << q(to_utf8(c)) << "];\n";
        }
        os << "}\n";
        return os.str();
    }
    if (target == "groups") {
        os << "digraph groups {\n  node [shape=box];\n";
        if (!empty) {
            for (NodeId v : t.live_nodes()) {
                std::string text = std::to_string(to_index(v)) + ":";
                const GroupList& g = s.groups().groups(v);
                for (const auto& pg : g.groups)
                    text += " <" + std::to_string(pg.s) + "," + std::to_string(pg.d) + "," + std::to_string(pg.t) + ">";
                if (v != t.root() && !t.is_leaf(v) && !g.eps_consumed) text += " +eps";
                os << "  n" << to_index(v) << " [label=" << q(text) << "];\n";
            }
            for (NodeId v : t.live_nodes())
                for (const auto& [c, w] : t.children(v))
                    os << "  n" << to_index(v) << " -> n" << to_index(w) << " [label=" << q(to_utf8(c)) << "];\n";
        }
        os << "}\n";
        return os.str();
    }
    if (target == "eertree") {
        const Eertree* e = s.eertree();
        if (!e) fail(Errc::UnknownTarget, "eertree export needs an eertree engine");
        os << "digraph eertree {\n";
        if (!empty) {
            auto nodes = e->live_nodes();
            for (PalId x : nodes) {
                std::string text = x == kBottom ? "-1" : x == kEmpty ? "0" : show(e->str(x));
                os << "  p" << x << " [label=" << q(text) << "];\n";
            }
            for (PalId x : nodes)
                for (const auto& [c, y] : e->ext(x)) os << "  p" << x << " -> p" << y << " [label=" << q(to_utf8(c)) << "];\n";
            for (PalId x : nodes) {
                if (x == kBottom) continue;
                os << "  p" << x << " -> p" << e->slink(x) << " [style=dashed, color=blue];\n";
                if (x != kEmpty) os << "  p" << x << " -> p" << e->qlink(x) << " [style=dashed, color=red];\n";
                if (e->config().backend == DlinkBackend::Persistent) {
                    e->dlink_version(x).for_each([&](const Label& c, const PalId& y) {
                        os << "  p" << x << " -> p" << y << " [style=dotted, label=" << q(to_utf8(c)) << "];\n";
                    });
                }
            }
        }
        os << "}\n";
        return os.str();
    }
    if (target == "suffixtree") {
        const SuffixTree* st = s.suffix_tree();
        if (!st) fail(Errc::UnknownTarget, "suffixtree export needs the suffixtree engine");
        os << "digraph suffixtree {\n";
        if (!empty) {
            auto nodes = st->live_nodes();
            for (StId w : nodes) {
                std::string text = show(st->str(w));
                if (auto v = st->leaf_of(w)) text += " [" + std::to_string(to_index(*v)) + "]";
                os << "  s" << w << " [label=" << q(text) << "];\n";
            }
            for (StId w : nodes)
                for (const auto& [c, k] : st->children(w)) {
                    std::u32string edge;
                    for (std::size_t i = st->sdepth(w); i < st->sdepth(k); ++i) edge.push_back(st->char_at(k, i).code);
                    os << "  s" << w << " -> s" << k << " [label=" << q(show(edge)) << "];\n";
                }
            for (StId w : nodes)
                for (const auto& [c, k] : st->marks(w))
                    os << "  s" << w << " -> s" << k << " [style=dashed, label=" << q(to_utf8(c)) << "];\n";
        }
        os << "}\n";
        return os.str();
    }
    fail(Errc::UnknownTarget, std::string(target));
}

} // namespace triepal
