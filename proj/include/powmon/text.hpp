#ifndef POWMON_TEXT_HPP
#define POWMON_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace powmon::detail {

// Whitespace-insensitive scanner shared by the literal parsers.
class cursor {
public:
    explicit cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    // Optional sign followed by decimal digits, returned verbatim.
    std::string signed_digits() {
        skip_ws();
        std::string out;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-')
                out.push_back('-');
            ++pos_;
            skip_ws();
        }
        return out + digits();
    }

    std::string digits() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            out.push_back(text_[pos_++]);
        if (out.empty())
            fail("expected digits");
        return out;
    }

    void finish() {
        if (!at_end())
            fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace powmon::detail

#endif // POWMON_TEXT_HPP
