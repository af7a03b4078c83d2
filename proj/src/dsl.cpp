#include "noderel/dsl.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "noderel/errors.hpp"
#include "noderel/graph_io.hpp"

namespace noderel {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = leaf();
        skip_space();
        while (pos_ < text_.size()) {
            expect('|');
            e = op(e);
            skip_space();
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(message, 1, at + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::string_view word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    std::size_t number() {
        skip_space();
        const std::size_t start = pos_;
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == text_.data() + start) {
            fail("expected a positive integer", start);
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        if (value == 0) {
            fail("size must be at least 1", start);
        }
        return value;
    }

    GraphExpr leaf() {
        skip_space();
        const std::size_t start = pos_;
        const auto name = word();
        if (name == "G") {
            expect('(');
            const auto close = text_.find(')', pos_);
            if (close == std::string_view::npos) {
                fail("unterminated G(...)", start);
            }
            std::string file(text_.substr(pos_, close - pos_));
            while (!file.empty() && std::isspace(static_cast<unsigned char>(file.back()))) {
                file.pop_back();
            }
            const auto first = file.find_first_not_of(" \t");
            file = first == std::string::npos ? std::string{} : file.substr(first);
            if (file.empty()) {
                fail("G(...) needs a file name", pos_);
            }
            pos_ = close + 1;
            return GraphExpr::base(read_edge_list_file(file), "G(" + file + ")");
        }
        if (name != "P" && name != "K" && name != "E") {
            fail(name.empty() ? "expected a leaf graph (P<n>, K<n>, E<n> or G(file))"
                               : "unknown leaf '" + std::string(name) + "'",
                 start);
        }
        const std::size_t n = number();
        const std::string label = std::string(name) + std::to_string(n);
        if (name == "P") {
            return GraphExpr::base(path(n), label);
        }
        if (name == "K") {
            return GraphExpr::base(complete(n), label);
        }
        return GraphExpr::base(edgeless(n), label);
    }

    GraphExpr op(const GraphExpr& e) {
        skip_space();
        const std::size_t start = pos_;
        const auto name = word();
        if (name == "sub") {
            return e.sub_clique(number());
        }
        if (name == "addIso") {
            return e.add_isolated();
        }
        if (name == "addUniv") {
            return e.add_universal();
        }
        fail(name.empty() ? "expected an operator (sub <l>, addIso, addUniv)"
                          : "unknown operator '" + std::string(name) + "'",
             start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GraphExpr parse_dsl(std::string_view text) { return Parser(text).parse(); }

std::string to_dsl(const GraphExpr& e) {
    switch (e.kind()) {
        case GraphExpr::Kind::Base:
            if (e.label().empty()) {
                throw std::logic_error("expression leaf has no DSL label");
            }
            return e.label();
        case GraphExpr::Kind::SubClique:
            return to_dsl(e.child()) + " | sub " + std::to_string(e.clique_size());
        case GraphExpr::Kind::AddIsolated:
            return to_dsl(e.child()) + " | addIso";
        case GraphExpr::Kind::AddUniversal:
            return to_dsl(e.child()) + " | addUniv";
    }
    throw std::logic_error("unknown expression kind");
}

}  // namespace noderel
