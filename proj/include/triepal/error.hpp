#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triepal {

enum class Errc {
    DuplicateEdgeLabel,
    UnknownNode,
    ReservedLabel,
    NotALeaf,
    IsRoot,
    DistanceOutOfRange,
    StaleParentState,
    UndoMismatch,
    EmptyTrie,
    UnknownElement,
    ColorAbsent,
    ElementStillColored,
    InconsistentState,
    UnknownEngine,
    UnknownTarget,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = {});

} // namespace triepal
