#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace testgen::lang {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, int column, const std::string& message);

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

enum class TokenKind {
    Name,
    Int,
    Float,
    String,
    Newline,
    Indent,
    Dedent,
    End,
    // keywords
    Def, Class, If, Elif, Else, While, Return, And, Or, Not, True, False, None, Use, As, Assert, Pass,
    // punctuation
    LParen, RParen, LBracket, RBracket, Comma, Colon, Dot, Arrow, Assign,
    Plus, Minus, Star, Slash, Percent, EqEq, NotEq, Less, LessEq, Greater, GreaterEq,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;  // identifier name or decoded string literal
    std::int64_t int_value = 0;
    double float_value = 0.0;
    int line = 0;
    int column = 0;
};

[[nodiscard]] const char* describe(TokenKind kind);

// Indentation-aware tokenizer; throws SyntaxError on malformed input.
[[nodiscard]] std::vector<Token> tokenize(std::string_view source);

}  // namespace testgen::lang
