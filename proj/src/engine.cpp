#include "triepal/engine.hpp"
#include "triepal/error.hpp"
#include "triepal/oracles.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace triepal {

namespace {

constexpr std::array kEngines{
    EngineKind::EertreeBasic,     EngineKind::EertreeQuick, EngineKind::EertreeDirectPersistent,
    EngineKind::EertreeDirectNca, EngineKind::SuffixTree,   EngineKind::Oracle,
};

std::optional<EertreeConfig> eertree_config(EngineKind kind) {
    switch (kind) {
    case EngineKind::EertreeBasic: return EertreeConfig{LpsStrategy::Basic, DlinkBackend::Persistent};
    case EngineKind::EertreeQuick: return EertreeConfig{LpsStrategy::Quick, DlinkBackend::Persistent};
    case EngineKind::EertreeDirectPersistent: return EertreeConfig{LpsStrategy::Direct, DlinkBackend::Persistent};
    case EngineKind::EertreeDirectNca: return EertreeConfig{LpsStrategy::Direct, DlinkBackend::ColoredAncestor};
    default: return std::nullopt;
    }
}

std::string u8(std::u32string_view s) { return to_utf8(s); }

std::string opt_label(const std::optional<Label>& c) { return c ? to_utf8(*c) : "-"; }

} // namespace

std::string_view engine_name(EngineKind kind) {
    switch (kind) {
    case EngineKind::EertreeBasic: return "eertree-basic";
    case EngineKind::EertreeQuick: return "eertree-quick";
    case EngineKind::EertreeDirectPersistent: return "eertree-direct-persistent";
    case EngineKind::EertreeDirectNca: return "eertree-direct-nca";
    case EngineKind::SuffixTree: return "suffixtree";
    case EngineKind::Oracle: return "oracle";
    }
    return "?";
}

EngineKind parse_engine(std::string_view name) {
    for (EngineKind k : kEngines)
        if (engine_name(k) == name) return k;
    fail(Errc::UnknownEngine, std::string(name));
}

std::span<const EngineKind> all_engines() { return kEngines; }

Session::Session(EngineKind kind, SessionOptions options)
    : kind_(kind), options_(options), groups_(trie_) {
    if (auto cfg = eertree_config(kind)) eertree_ = std::make_unique<Eertree>(trie_, *cfg);
    if (kind == EngineKind::SuffixTree) {
        st_ = std::make_unique<SuffixTree>(trie_);
        st_->set_verify(options.verify);
    }
}

Session::~Session() = default;

std::unique_ptr<Session> Session::open(EngineKind kind, SessionOptions options) {
    return std::unique_ptr<Session>(new Session(kind, options));
}

std::unique_ptr<Session> Session::open(std::string_view name, SessionOptions options) {
    return open(parse_engine(name), options);
}

Event Session::snapshot(Event e) {
    const auto st = trie_.stats();
    e.seq = ++seq_;
    e.n = st.edges;
    e.l = st.leaves;
    e.h = st.height;
    e.d = distinct_count();
    e.maxpal = st.edges == 0 ? 0 : groups_.count_maximal();
    return e;
}

Event Session::insert(std::uint32_t parent, Label a) {
    const NodeId u = node_id(parent);
    const NodeId v = trie_.insert_leaf(u, a);
    auto res = groups_.on_insert(u, v, a);
    if (undo_.size() <= to_index(v)) undo_.resize(to_index(v) + 1);
    undo_[to_index(v)] = std::move(res.undo);

    Event e;
    e.op = 'I';
    e.id = to_index(v);
    e.parent = parent;
    e.label = a;
    last_steps_ = 0;
    if (eertree_) {
        auto out = eertree_->on_insert(u, v, a);
        last_steps_ = out.steps;
        if (out.created) e.new_palindrome = NewPalindrome{static_cast<std::uint32_t>(eertree_->len(out.node)), e.id};
    } else if (st_) {
        st_->on_insert(u, v, a);
        if (st_->is_unique(v, res.lps_len)) {
            ++st_distinct_;
            e.new_palindrome = NewPalindrome{res.lps_len, e.id};
        }
    } else {
        const std::u32string s = trie_.path_string(v);
        std::optional<std::uint32_t> fresh;
        for (std::uint32_t len : oracle::palindromic_suffixes(s)) {
            if (oracle_counts_[s.substr(s.size() - len)]++ == 0) {
                if (fresh) fail(Errc::InconsistentState, "two new palindromes from one leaf");
                fresh = len;
            }
        }
        if (fresh) e.new_palindrome = NewPalindrome{*fresh, e.id};
    }
    if (options_.fault && e.new_palindrome && e.new_palindrome->len >= 3) e.new_palindrome.reset();
    return snapshot(e);
}

Event Session::remove(std::uint32_t id) {
    const NodeId v = node_id(id);
    if (!trie_.is_live(v)) fail(Errc::UnknownNode, "node " + std::to_string(id));
    if (v == trie_.root()) fail(Errc::IsRoot);
    if (!trie_.is_leaf(v)) fail(Errc::NotALeaf, "node " + std::to_string(id));

    Event e;
    e.op = 'D';
    e.id = id;
    e.parent = to_index(trie_.parent(v));
    e.label = trie_.label(v);
    if (eertree_) {
        auto out = eertree_->on_delete(v);
        if (out.removed) e.removed_palindrome = static_cast<std::uint32_t>(out.len);
    } else if (st_) {
        const std::uint32_t p = groups_.longest_pal_suffix(v);
        const bool unique = st_->is_unique(v, p);
        st_->on_delete(v);
        if (unique) {
            --st_distinct_;
            e.removed_palindrome = p;
        }
    } else {
        const std::u32string s = trie_.path_string(v);
        std::optional<std::uint32_t> gone;
        for (std::uint32_t len : oracle::palindromic_suffixes(s)) {
            auto it = oracle_counts_.find(s.substr(s.size() - len));
            if (--it->second == 0) {
                if (gone) fail(Errc::InconsistentState, "two palindromes vanished with one leaf");
                gone = len;
                oracle_counts_.erase(it);
            }
        }
        e.removed_palindrome = gone;
    }
    groups_.on_delete(v, undo_[id]);
    undo_[id] = UndoRecord{};
    trie_.delete_leaf(v);
    return snapshot(e);
}

std::size_t Session::distinct_count() const {
    if (eertree_) return eertree_->distinct_count();
    if (st_) return st_distinct_;
    return oracle_counts_.size();
}

std::vector<std::u32string> Session::distinct_palindromes() const {
    std::set<std::u32string> out;
    if (eertree_) {
        for (PalId x : eertree_->live_nodes())
            if (x != kBottom && x != kEmpty) out.insert(eertree_->str(x));
    } else if (st_) {
        for (NodeId v : trie_.live_nodes()) {
            if (v == trie_.root()) continue;
            const std::u32string s = trie_.path_string(v);
            out.insert(s.substr(s.size() - groups_.longest_pal_suffix(v)));
        }
    } else {
        for (const auto& [s, count] : oracle_counts_) out.insert(s);
    }
    return {out.begin(), out.end()};
}

std::string Session::canonical_dump() const {
    std::ostringstream os;
    const auto st = trie_.stats();
    os << "trie N=" << st.edges << " L=" << st.leaves << " h=" << st.height << " D=" << distinct_count() << "\n";

    std::map<std::u32string, NodeId> by_path;
    for (NodeId v : trie_.live_nodes()) by_path.emplace(trie_.path_string(v), v);
    for (const auto& [path, v] : by_path) {
        os << "node '" << u8(path) << "' groups";
        const GroupList& g = groups_.groups(v);
        for (const auto& pg : g.groups) os << " <" << pg.s << "," << pg.d << "," << pg.t << ">";
        os << (g.eps_consumed ? " eps-consumed" : "");
        if (v != trie_.root()) os << " lps=" << groups_.longest_pal_suffix(v);
        if (eertree_) os << " lps-node='" << u8(eertree_->str(eertree_->lps(v))) << "' pre=" << to_utf8(eertree_->pre_lps(v));
        if (st_) os << " repeat=" << st_->longest_repeating_suffix_len(v);
        os << "\n";
    }

    if (eertree_) {
        auto name = [&](PalId x) -> std::string {
            if (x == kBottom) return "<bottom>";
            if (x == kEmpty) return "<empty>";
            return u8(eertree_->str(x));
        };
        std::map<std::string, PalId> nodes;
        for (PalId x : eertree_->live_nodes()) nodes.emplace(name(x), x);
        for (const auto& [nm, x] : nodes) {
            os << "pal '" << nm << "' len=" << eertree_->len(x) << " slink='" << name(eertree_->slink(x))
               << "' pre_s=" << opt_label(eertree_->pre_s(x)) << " qlink='" << name(eertree_->qlink(x))
               << "' pre_q=" << opt_label(eertree_->pre_q(x)) << " incoming=" << eertree_->incoming(x) << " ext";
            for (const auto& [c, y] : eertree_->ext(x)) os << " " << to_utf8(c) << ":'" << name(y) << "'";
            os << " dlinks";
            if (eertree_->config().backend == DlinkBackend::Persistent) {
                eertree_->dlink_version(x).for_each(
                    [&](const Label& c, const PalId& y) { os << " " << to_utf8(c) << ":'" << name(y) << "'"; });
            } else {
                const ColoredAncestor* t = eertree_->nca_tree();
                const NcaId h = *eertree_->nca_handle(x);
                os << " color=" << to_utf8(t->color(h));
            }
            os << "\n";
        }
    }

    if (st_) {
        std::map<std::u32string, StId> nodes;
        for (StId w : st_->live_nodes()) nodes.emplace(st_->str(w), w);
        for (const auto& [s, w] : nodes) {
            os << "st '" << u8(s) << "'";
            if (auto p = st_->parent(w)) os << " parent='" << u8(st_->str(*p)) << "'";
            for (const auto& [c, t] : st_->marks(w)) os << " mark " << to_utf8(c) << ":'" << u8(st_->str(t)) << "'";
            os << "\n";
        }
    }

    if (!eertree_ && !st_) {
        for (const auto& [s, count] : oracle_counts_) os << "pal '" << u8(s) << "' x" << count << "\n";
    }
    return os.str();
}

} // namespace triepal
