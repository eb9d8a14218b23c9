#pragma once

#include "triepal/engine.hpp"
#include "triepal/script.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triepal {

struct CheckOptions {
    std::vector<EngineKind> engines;  // compared against the oracle engine
    SessionOptions session;           // applied to the engines under test only
    bool minimize = true;
};

struct CheckResult {
    bool ok = true;
    std::optional<EngineKind> engine;
    std::size_t op_index = 0;
    std::string detail;
    std::vector<Op> reproducer;
};

/// Runs the script on every selected engine and on the oracle, comparing the
/// event streams field by field.
CheckResult check_script(const std::vector<Op>& ops, const CheckOptions& options);

/// Throws UnknownTarget. Targets: trie, eertree, suffixtree, groups.
/// eertree and suffixtree need a session of the matching engine family.
std::string export_dot(const Session& session, std::string_view target);

} // namespace triepal
