#include "relog/formula.hpp"

#include <cctype>
#include <sstream>

namespace relog {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ModelSpec parse() {
        ModelSpec spec;
        spec.outcome = term();
        expect('~');
        spec.predictors.push_back(term());
        skip_ws();
        while (pos_ < text_.size()) {
            expect('+');
            spec.predictors.push_back(term());
            skip_ws();
        }
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& msg, size_t at) {
        std::ostringstream ss;
        ss << "model parse error at position " << at + 1 << ": " << msg;
        throw parse_error(ss.str(), at);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_' || text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a name", start);
        }
        return text_.substr(start, pos_ - start);
    }

    double number() {
        skip_ws();
        size_t start = pos_;
        try {
            size_t consumed = 0;
            double v = std::stod(text_.substr(start), &consumed);
            pos_ = start + consumed;
            return v;
        } catch (const std::exception&) {
            fail("expected a number", start);
        }
    }

    ModelTerm term() {
        size_t name_pos = pos_;
        std::string name = ident();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '(') {
            return {name, TransformSpec::identity()};
        }
        size_t paren_pos = pos_;
        ++pos_;  // '('
        std::string column = ident();
        bool has_p = false;
        double p = 0.0;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            size_t key_pos = pos_;
            std::string key = ident();
            if (key != "p") {
                fail("expected 'p=' after ','", key_pos);
            }
            expect('=');
            p = number();
            has_p = true;
        }
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
            fail("unclosed '(' in term", paren_pos);
        }
        ++pos_;
        return {column, make_transform(name, has_p, p, name_pos)};
    }

    TransformSpec make_transform(const std::string& func, bool has_p, double p,
                                 size_t at) {
        try {
            if (func == "log") {
                return has_p ? TransformSpec::rescaled_log(LogBase::from_p(p))
                             : TransformSpec::natural_log();
            }
            if (func == "log1p") {
                LogBase b = has_p ? LogBase::from_p(p) : LogBase::natural();
                return TransformSpec::rescaled_log1p(b);
            }
            if (func == "asinh") {
                if (has_p) fail("asinh takes no p= argument", at);
                return TransformSpec::asinh();
            }
            if (func == "identity") {
                if (has_p) fail("identity takes no p= argument", at);
                return TransformSpec::identity();
            }
        } catch (const std::invalid_argument& e) {
            fail(e.what(), at);
        }
        fail("unknown transform '" + func + "' (expected log, log1p, asinh, or identity)", at);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

ModelSpec parse_model(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace relog
