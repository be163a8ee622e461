#pragma once

// Small well-formedness scanner for the SVG documents the tests inspect:
// prolog, nested elements, attributes, character data, comments, and the
// five predefined entities. Deliberately not a general XML parser — just
// enough to fail on unbalanced tags, bad quoting, or stray '<'/'&', and to
// hand back elements with their attributes for assertions.

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace xmlcheck {

struct Element {
    std::string name;
    std::map<std::string, std::string> attributes;
};

struct Result {
    bool ok = false;
    std::string error;
    std::vector<Element> elements;  // document order, all depths flattened
};

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    Result run() {
        skip_whitespace();
        if (peek_starts("<?xml")) {
            const auto end = text_.find("?>", pos_);
            if (end == std::string::npos) {
                return fail("unterminated XML declaration");
            }
            pos_ = end + 2;
        }
        skip_misc();
        if (!element()) {
            return result_;
        }
        skip_misc();
        if (pos_ != text_.size()) {
            return fail("content after the root element");
        }
        result_.ok = true;
        return result_;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Result result_;

    Result fail(const std::string& message) {
        result_.ok = false;
        result_.error = message + " (offset " + std::to_string(pos_) + ")";
        return result_;
    }

    bool peek_starts(const char* prefix) const {
        return text_.compare(pos_, std::string(prefix).size(), prefix) == 0;
    }

    void skip_whitespace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void skip_misc() {
        for (;;) {
            skip_whitespace();
            if (peek_starts("<!--")) {
                const auto end = text_.find("-->", pos_);
                if (end == std::string::npos) {
                    pos_ = text_.size();
                    return;
                }
                pos_ = end + 3;
                continue;
            }
            return;
        }
    }

    static bool name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
    }

    static bool name_char(char c) {
        return name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
               c == '.';
    }

    std::string read_name() {
        if (pos_ >= text_.size() || !name_start(text_[pos_])) {
            return {};
        }
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) {
            ++pos_;
        }
        return text_.substr(begin, pos_ - begin);
    }

    bool entity() {
        for (const char* known : {"&amp;", "&lt;", "&gt;", "&quot;", "&apos;"}) {
            if (peek_starts(known)) {
                pos_ += std::string(known).size();
                return true;
            }
        }
        if (peek_starts("&#")) {
            std::size_t p = pos_ + 2;
            while (p < text_.size() && text_[p] != ';') {
                ++p;
            }
            if (p < text_.size() && p > pos_ + 2) {
                pos_ = p + 1;
                return true;
            }
        }
        fail("malformed entity reference");
        return false;
    }

    // Parses one element; appends it (and descendants) to result_.elements.
    bool element() {
        if (pos_ >= text_.size() || text_[pos_] != '<') {
            fail("expected an element");
            return false;
        }
        ++pos_;
        const std::string name = read_name();
        if (name.empty()) {
            fail("missing element name");
            return false;
        }
        Element current;
        current.name = name;

        for (;;) {
            skip_whitespace();
            if (pos_ >= text_.size()) {
                fail("unterminated start tag <" + name + ">");
                return false;
            }
            if (text_[pos_] == '/') {
                if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>') {
                    fail("malformed self-closing tag <" + name + ">");
                    return false;
                }
                pos_ += 2;
                result_.elements.push_back(std::move(current));
                return true;
            }
            if (text_[pos_] == '>') {
                ++pos_;
                break;
            }
            const std::string attr = read_name();
            if (attr.empty()) {
                fail("malformed attribute in <" + name + ">");
                return false;
            }
            if (current.attributes.count(attr) != 0) {
                fail("duplicate attribute '" + attr + "' in <" + name + ">");
                return false;
            }
            skip_whitespace();
            if (pos_ >= text_.size() || text_[pos_] != '=') {
                fail("attribute '" + attr + "' missing '='");
                return false;
            }
            ++pos_;
            skip_whitespace();
            if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\'')) {
                fail("attribute '" + attr + "' missing quoted value");
                return false;
            }
            const char quote = text_[pos_++];
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != quote) {
                if (text_[pos_] == '<') {
                    fail("raw '<' inside attribute value");
                    return false;
                }
                if (text_[pos_] == '&') {
                    const std::size_t before = pos_;
                    if (!entity()) {
                        return false;
                    }
                    value += text_.substr(before, pos_ - before);
                    continue;
                }
                value += text_[pos_++];
            }
            if (pos_ >= text_.size()) {
                fail("unterminated attribute value");
                return false;
            }
            ++pos_;  // closing quote
            current.attributes.emplace(attr, std::move(value));
        }

        result_.elements.push_back(std::move(current));

        // Content: character data, child elements, comments, then </name>.
        for (;;) {
            if (pos_ >= text_.size()) {
                fail("missing </" + name + ">");
                return false;
            }
            const char c = text_[pos_];
            if (c == '<') {
                if (peek_starts("<!--")) {
                    skip_misc();
                    continue;
                }
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                    pos_ += 2;
                    const std::string closing = read_name();
                    skip_whitespace();
                    if (closing != name) {
                        fail("</" + closing + "> closes <" + name + ">");
                        return false;
                    }
                    if (pos_ >= text_.size() || text_[pos_] != '>') {
                        fail("malformed </" + name + ">");
                        return false;
                    }
                    ++pos_;
                    return true;
                }
                if (!element()) {
                    return false;
                }
                continue;
            }
            if (c == '&') {
                if (!entity()) {
                    return false;
                }
                continue;
            }
            ++pos_;
        }
    }
};

inline Result parse(const std::string& text) { return Scanner(text).run(); }

// All elements with the given tag name; class_name additionally filters on
// the class attribute when nonempty.
inline std::vector<Element> find_elements(const Result& parsed, const std::string& name,
                                          const std::string& class_name = {}) {
    std::vector<Element> matches;
    for (const Element& element : parsed.elements) {
        if (element.name != name) {
            continue;
        }
        if (!class_name.empty()) {
            const auto found = element.attributes.find("class");
            if (found == element.attributes.end() || found->second != class_name) {
                continue;
            }
        }
        matches.push_back(element);
    }
    return matches;
}

}  // namespace xmlcheck
