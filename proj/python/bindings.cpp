#include "triepal/check.hpp"
#include "triepal/engine.hpp"
#include "triepal/error.hpp"
#include "triepal/oracles.hpp"
#include "triepal/script.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace triepal;

namespace {

Label to_label(const std::string& s) {
    const std::u32string u = from_utf8(s);
    if (u.size() != 1) throw py::value_error("label must be a single character");
    return Label{u[0]};
}

std::string to_str(std::u32string_view s) { return to_utf8(s); }

py::object event_dict(const Event& e) {
    py::object np = py::none();
    py::object rp = py::none();
    if (e.new_palindrome) np = py::dict("len"_a = e.new_palindrome->len, "end"_a = e.new_palindrome->end);
    if (e.removed_palindrome) rp = py::dict("len"_a = *e.removed_palindrome);
    return py::dict("seq"_a = e.seq, "op"_a = std::string(1, e.op), "id"_a = e.id, "parent"_a = e.parent,
                    "label"_a = to_utf8(e.label), "new_palindrome"_a = np, "removed_palindrome"_a = rp, "n"_a = e.n,
                    "l"_a = e.l, "h"_a = e.h, "d"_a = e.d, "maxpal"_a = e.maxpal);
}

} // namespace

PYBIND11_MODULE(_triepal, m) {
    m.doc() = "Palindromes in dynamic tries";

    py::register_exception<Error>(m, "TriepalError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    py::class_<Session>(m, "Session")
        .def(py::init([](const std::string& engine, bool verify) {
                 return Session::open(engine, SessionOptions{verify, false});
             }),
             "engine"_a = "eertree-quick", "verify"_a = false)
        .def("insert", [](Session& s, std::uint32_t parent, const std::string& label) {
            return event_dict(s.insert(parent, to_label(label)));
        }, "parent"_a, "label"_a)
        .def("delete", [](Session& s, std::uint32_t id) { return event_dict(s.remove(id)); }, "id"_a)
        .def_property_readonly("engine", [](const Session& s) { return std::string(engine_name(s.kind())); })
        .def_property_readonly("n", [](const Session& s) { return s.trie().stats().edges; })
        .def_property_readonly("l", [](const Session& s) { return s.trie().stats().leaves; })
        .def_property_readonly("h", [](const Session& s) { return s.trie().stats().height; })
        .def_property_readonly("d", &Session::distinct_count)
        .def("distinct_palindromes", [](const Session& s) {
            std::vector<std::string> out;
            for (const auto& p : s.distinct_palindromes()) out.push_back(to_str(p));
            return out;
        })
        .def("maximal_palindromes", [](const Session& s) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
            for (const auto& mp : s.groups().enumerate_maximal()) out.emplace_back(to_index(mp.end), mp.length);
            std::sort(out.begin(), out.end());
            return out;
        }, "Sorted (end node, length) pairs.")
        .def("count_maximal", [](const Session& s) { return s.groups().count_maximal(); })
        .def("groups", [](const Session& s, std::uint32_t v) {
            std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
            for (const auto& g : s.groups().groups(node_id(v)).groups) out.emplace_back(g.s, g.d, g.t);
            return out;
        }, "node"_a)
        .def("path", [](const Session& s, std::uint32_t v) { return to_str(s.trie().path_string(node_id(v))); }, "node"_a)
        .def("chain_steps", &Session::chain_steps)
        .def("canonical_dump", &Session::canonical_dump)
        .def("export_dot", [](const Session& s, const std::string& what) { return export_dot(s, what); }, "what"_a);

    m.def("engines", [] {
        std::vector<std::string> out;
        for (EngineKind k : all_engines()) out.emplace_back(engine_name(k));
        return out;
    });

    m.def("manacher", [](const std::string& s) { return oracle::manacher(from_utf8(s)); }, "s"_a);

    m.def("generate_script", [](std::uint64_t seed, std::size_t ops, std::size_t sigma, const std::string& shape) {
        ScriptSpec spec;
        spec.seed = seed;
        spec.ops = ops;
        spec.sigma = sigma;
        spec.shape = parse_shape(shape);
        return format_ops(generate_script(spec));
    }, "seed"_a = 1, "ops"_a = 200, "sigma"_a = 2, "shape"_a = "uniform", "Random ops-file text.");

    m.def("run", [](const std::string& ops_text, const std::string& engine) {
        auto s = Session::open(engine);
        py::list out;
        for (const Event& e : run_script(*s, parse_ops(ops_text))) out.append(event_dict(e));
        return out;
    }, "ops"_a, "engine"_a = "eertree-quick", "Replay ops-file text; returns the event list.");

    m.def("check", [](const std::string& ops_text, std::vector<std::string> engines) {
        CheckOptions opts;
        for (const auto& e : engines) opts.engines.push_back(parse_engine(e));
        auto r = check_script(parse_ops(ops_text), opts);
        return py::dict("ok"_a = r.ok, "detail"_a = r.detail, "reproducer"_a = format_ops(r.reproducer));
    }, "ops"_a, "engines"_a);
}
