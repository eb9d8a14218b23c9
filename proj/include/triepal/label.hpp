#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>

namespace triepal {

/// An edge label drawn from a general ordered alphabet. Code point 0 is
/// reserved for the sentinel (`$`), which also stands for "no character"
/// whenever a palindrome is preceded by the start of the path.
struct Label {
    char32_t code = 0;

    constexpr Label() = default;
    constexpr explicit Label(char32_t c) : code(c) {}

    static constexpr Label sentinel() { return Label{}; }
    constexpr bool is_sentinel() const { return code == 0; }

    friend constexpr auto operator<=>(Label, Label) = default;
};

/// Handle of a trie node. Handles are issued sequentially (root = 0) and are
/// never reused within a trie's lifetime.
enum class NodeId : std::uint32_t {};

inline constexpr NodeId kNoNode{std::numeric_limits<std::uint32_t>::max()};

constexpr std::uint32_t to_index(NodeId v) { return static_cast<std::uint32_t>(v); }
constexpr NodeId node_id(std::uint32_t i) { return static_cast<NodeId>(i); }

std::string to_utf8(Label a);
std::string to_utf8(std::u32string_view s);

/// Decodes UTF-8; throws std::invalid_argument on malformed input.
std::u32string from_utf8(std::string_view s);

inline std::u32string to_u32(std::string_view ascii) {
    std::u32string out;
    out.reserve(ascii.size());
    for (char ch : ascii) out.push_back(static_cast<unsigned char>(ch));
    return out;
}

} // namespace triepal

template <>
struct std::hash<triepal::Label> {
    std::size_t operator()(triepal::Label a) const noexcept { return std::hash<char32_t>{}(a.code); }
};
