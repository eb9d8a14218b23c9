#include "triepal/label.hpp"
#include "triepal/error.hpp"

#include <stdexcept>

namespace triepal {

namespace {

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace

std::string to_utf8(Label a) {
    if (a.is_sentinel()) return "$";
    std::string out;
    append_utf8(out, a.code);
    return out;
}

std::string to_utf8(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (cp == 0)
            out.push_back('$');
        else
            append_utf8(out, cp);
    }
    return out;
}

std::u32string from_utf8(std::string_view s) {
    std::u32string out;
    std::size_t i = 0;
    while (i < s.size()) {
        auto b0 = static_cast<unsigned char>(s[i]);
        int extra = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            extra = 1;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            extra = 2;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            extra = 3;
        } else {
            throw std::invalid_argument("invalid UTF-8 lead byte");
        }
        if (i + extra >= s.size() && extra > 0)
            throw std::invalid_argument("truncated UTF-8 sequence");
        for (int k = 1; k <= extra; ++k) {
            auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) throw std::invalid_argument("invalid UTF-8 continuation byte");
            cp = (cp << 6) | (b & 0x3F);
        }
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw std::invalid_argument("invalid code point");
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::DuplicateEdgeLabel: return "DuplicateEdgeLabel";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::ReservedLabel: return "ReservedLabel";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::IsRoot: return "IsRoot";
    case Errc::DistanceOutOfRange: return "DistanceOutOfRange";
    case Errc::StaleParentState: return "StaleParentState";
    case Errc::UndoMismatch: return "UndoMismatch";
    case Errc::EmptyTrie: return "EmptyTrie";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::ColorAbsent: return "ColorAbsent";
    case Errc::ElementStillColored: return "ElementStillColored";
    case Errc::InconsistentState: return "InconsistentState";
    case Errc::UnknownEngine: return "UnknownEngine";
    case Errc::UnknownTarget: return "UnknownTarget";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                        : std::string(errc_name(code)) + ": " + detail),
      code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

} // namespace triepal
