#pragma once

#include <stdexcept>
#include <string>

namespace fracbox {

/// Malformed textual input (graph6 or edge-list). The kind distinguishes the
/// failure so callers and tests can tell them apart.
class ParseError : public std::runtime_error {
public:
    enum class Kind {
        BadHeader,        // graph6: bogus ">>...<<" prefix or size byte < 63
        BadByte,          // graph6: data byte outside [63, 126]
        Truncated,        // graph6: fewer data bytes than n requires
        TrailingData,     // graph6: extra bytes after the encoded graph
        BadToken,         // edge list: non-integer token
        VertexOutOfRange, // edge list: endpoint not in 0..n-1
        SelfLoop,         // edge list: line "u u"
        MissingCount,     // edge list: no leading vertex-count line
    };

    ParseError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// An instance exceeds one of the configured size limits. The message names
/// the limit that was hit and its value.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(const std::string& limit_name, long long limit, long long actual)
        : std::runtime_error("instance too large: " + limit_name + " is " +
                             std::to_string(limit) + ", got " + std::to_string(actual)),
          limit_name_(limit_name), limit_(limit), actual_(actual) {}

    const std::string& limit_name() const { return limit_name_; }
    long long limit() const { return limit_; }
    long long actual() const { return actual_; }

private:
    std::string limit_name_;
    long long limit_;
    long long actual_;
};

} // namespace fracbox
