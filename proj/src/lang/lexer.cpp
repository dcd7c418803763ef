#include "testgen/lang/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_map>

namespace testgen::lang {

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message)
{
}

const char* describe(TokenKind kind)
{
    switch (kind) {
    case TokenKind::Name: return "identifier";
    case TokenKind::Int: return "integer literal";
    case TokenKind::Float: return "float literal";
    case TokenKind::String: return "string literal";
    case TokenKind::Newline: return "end of line";
    case TokenKind::Indent: return "indent";
    case TokenKind::Dedent: return "dedent";
    case TokenKind::End: return "end of input";
    case TokenKind::Def: return "'def'";
    case TokenKind::Class: return "'class'";
    case TokenKind::If: return "'if'";
    case TokenKind::Elif: return "'elif'";
    case TokenKind::Else: return "'else'";
    case TokenKind::While: return "'while'";
    case TokenKind::Return: return "'return'";
    case TokenKind::And: return "'and'";
    case TokenKind::Or: return "'or'";
    case TokenKind::Not: return "'not'";
    case TokenKind::True: return "'True'";
    case TokenKind::False: return "'False'";
    case TokenKind::None: return "'None'";
    case TokenKind::Use: return "'use'";
    case TokenKind::As: return "'as'";
    case TokenKind::Assert: return "'assert'";
    case TokenKind::Pass: return "'pass'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Assign: return "'='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Less: return "'<'";
    case TokenKind::LessEq: return "'<='";
    case TokenKind::Greater: return "'>'";
    case TokenKind::GreaterEq: return "'>='";
    }
    return "token";
}

namespace {

const std::unordered_map<std::string_view, TokenKind>& keywords()
{
    static const std::unordered_map<std::string_view, TokenKind> table{
        {"def", TokenKind::Def},       {"class", TokenKind::Class},   {"if", TokenKind::If},
        {"elif", TokenKind::Elif},     {"else", TokenKind::Else},     {"while", TokenKind::While},
        {"return", TokenKind::Return}, {"and", TokenKind::And},       {"or", TokenKind::Or},
        {"not", TokenKind::Not},       {"True", TokenKind::True},     {"False", TokenKind::False},
        {"None", TokenKind::None},     {"use", TokenKind::Use},       {"as", TokenKind::As},
        {"assert", TokenKind::Assert}, {"pass", TokenKind::Pass},
    };
    return table;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        while (pos_ < src_.size()) {
            if (at_line_start_ && depth_ == 0) {
                if (!handle_indentation()) {
                    continue;
                }
            }
            scan_token();
        }
        if (depth_ > 0) {
            const Token& open = tokens_[opened_.back()];
            throw SyntaxError(open.line, open.column, "bracket was never closed");
        }
        if (line_has_tokens_) {
            emit(TokenKind::Newline, line_, col_);
        }
        while (indents_.size() > 1) {
            indents_.pop_back();
            emit(TokenKind::Dedent, line_, col_);
        }
        emit(TokenKind::End, line_, col_);
        return std::move(tokens_);
    }

private:
    // Returns false when the whole physical line was blank or a comment.
    bool handle_indentation()
    {
        int width = 0;
        std::size_t p = pos_;
        while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t' || src_[p] == '\f')) {
            width = src_[p] == '\t' ? (width / 8 + 1) * 8 : width + 1;
            ++p;
        }
        if (p >= src_.size() || src_[p] == '\n' || src_[p] == '\r' || src_[p] == '#') {
            while (p < src_.size() && src_[p] != '\n') {
                ++p;
            }
            if (p < src_.size()) {
                ++p;
            }
            pos_ = p;
            ++line_;
            col_ = 1;
            return false;
        }
        col_ += static_cast<int>(p - pos_);
        pos_ = p;
        at_line_start_ = false;
        if (width > indents_.back()) {
            indents_.push_back(width);
            emit(TokenKind::Indent, line_, col_);
        } else {
            while (width < indents_.back()) {
                indents_.pop_back();
                emit(TokenKind::Dedent, line_, col_);
            }
            if (width != indents_.back()) {
                throw SyntaxError(line_, col_, "unindent does not match any outer indentation level");
            }
        }
        return true;
    }

    void newline()
    {
        ++pos_;
        if (depth_ == 0) {
            if (line_has_tokens_) {
                emit(TokenKind::Newline, line_, col_);
            }
            line_has_tokens_ = false;
            at_line_start_ = true;
        }
        ++line_;
        col_ = 1;
    }

    void scan_token()
    {
        const char c = src_[pos_];
        if (c == '\n') {
            newline();
            return;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
            advance(1);
            return;
        }
        if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') {
                advance(1);
            }
            return;
        }
        if (is_name_start(c)) {
            scan_name();
            return;
        }
        if (is_digit(c)) {
            scan_number();
            return;
        }
        if (c == '"' || c == '\'') {
            scan_string(c);
            return;
        }
        scan_punct();
    }

    void scan_name()
    {
        const int col = col_;
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_name_char(src_[pos_])) {
            advance(1);
        }
        std::string_view text = src_.substr(start, pos_ - start);
        if (auto it = keywords().find(text); it != keywords().end()) {
            emit(it->second, line_, col);
            return;
        }
        Token& tok = emit(TokenKind::Name, line_, col);
        tok.text = std::string(text);
    }

    void scan_number()
    {
        const int col = col_;
        const std::size_t start = pos_;
        bool is_float = false;
        while (pos_ < src_.size() && is_digit(src_[pos_])) {
            advance(1);
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            is_float = true;
            advance(1);
            while (pos_ < src_.size() && is_digit(src_[pos_])) {
                advance(1);
            }
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) {
                ++p;
            }
            if (p < src_.size() && is_digit(src_[p])) {
                is_float = true;
                advance(static_cast<int>(p - pos_));
                while (pos_ < src_.size() && is_digit(src_[pos_])) {
                    advance(1);
                }
            }
        }
        if (pos_ < src_.size() && is_name_start(src_[pos_])) {
            throw SyntaxError(line_, col_, "invalid numeric literal");
        }
        const std::string text(src_.substr(start, pos_ - start));
        if (is_float) {
            Token& tok = emit(TokenKind::Float, line_, col);
            tok.float_value = std::strtod(text.c_str(), nullptr);
            return;
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw SyntaxError(line_, col, "integer literal out of range");
        }
        if (text.size() > 1 && text[0] == '0') {
            throw SyntaxError(line_, col, "leading zeros in integer literal");
        }
        emit(TokenKind::Int, line_, col).int_value = value;
    }

    static int hex_digit(char c)
    {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    }

    void scan_string(char quote)
    {
        const int col = col_;
        advance(1);
        std::string value;
        while (true) {
            if (pos_ >= src_.size() || src_[pos_] == '\n') {
                throw SyntaxError(line_, col, "unterminated string literal");
            }
            const char c = src_[pos_];
            if (c == quote) {
                advance(1);
                break;
            }
            if (c != '\\') {
                value.push_back(c);
                advance(1);
                continue;
            }
            if (pos_ + 1 >= src_.size()) {
                throw SyntaxError(line_, col_, "unterminated string literal");
            }
            const char e = src_[pos_ + 1];
            advance(2);
            switch (e) {
            case 'n': value.push_back('\n'); break;
            case 't': value.push_back('\t'); break;
            case 'r': value.push_back('\r'); break;
            case '0': value.push_back('\0'); break;
            case '\\': value.push_back('\\'); break;
            case '\'': value.push_back('\''); break;
            case '"': value.push_back('"'); break;
            case 'x': {
                const int hi = pos_ < src_.size() ? hex_digit(src_[pos_]) : -1;
                const int lo = pos_ + 1 < src_.size() ? hex_digit(src_[pos_ + 1]) : -1;
                if (hi < 0 || lo < 0) {
                    throw SyntaxError(line_, col_, "invalid \\x escape");
                }
                value.push_back(static_cast<char>(hi * 16 + lo));
                advance(2);
                break;
            }
            default:
                throw SyntaxError(line_, col_ - 2, std::string("unknown escape sequence \\") + e);
            }
        }
        emit(TokenKind::String, line_, col).text = std::move(value);
    }

    void scan_punct()
    {
        const int col = col_;
        const char c = src_[pos_];
        const char n = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
        auto two = [&](TokenKind kind) {
            advance(2);
            emit(kind, line_, col);
        };
        auto one = [&](TokenKind kind) {
            advance(1);
            emit(kind, line_, col);
        };
        switch (c) {
        case '(': open_bracket(); one(TokenKind::LParen); return;
        case ')': close_bracket(); one(TokenKind::RParen); return;
        case '[': open_bracket(); one(TokenKind::LBracket); return;
        case ']': close_bracket(); one(TokenKind::RBracket); return;
        case ',': one(TokenKind::Comma); return;
        case ':': one(TokenKind::Colon); return;
        case '.': one(TokenKind::Dot); return;
        case '+': one(TokenKind::Plus); return;
        case '*': one(TokenKind::Star); return;
        case '/': one(TokenKind::Slash); return;
        case '%': one(TokenKind::Percent); return;
        case '-':
            if (n == '>') two(TokenKind::Arrow); else one(TokenKind::Minus);
            return;
        case '=':
            if (n == '=') two(TokenKind::EqEq); else one(TokenKind::Assign);
            return;
        case '!':
            if (n == '=') {
                two(TokenKind::NotEq);
                return;
            }
            break;
        case '<':
            if (n == '=') two(TokenKind::LessEq); else one(TokenKind::Less);
            return;
        case '>':
            if (n == '=') two(TokenKind::GreaterEq); else one(TokenKind::Greater);
            return;
        default: break;
        }
        throw SyntaxError(line_, col, std::string("unexpected character '") + c + "'");
    }

    void open_bracket()
    {
        ++depth_;
        opened_.push_back(tokens_.size());  // index of the token about to be emitted
    }

    void close_bracket()
    {
        if (depth_ == 0) {
            throw SyntaxError(line_, col_, "unmatched closing bracket");
        }
        --depth_;
        opened_.pop_back();
    }

    void advance(int n)
    {
        pos_ += static_cast<std::size_t>(n);
        col_ += n;
    }

    Token& emit(TokenKind kind, int line, int col)
    {
        Token tok;
        tok.kind = kind;
        tok.line = line;
        tok.column = col;
        tokens_.push_back(std::move(tok));
        if (kind != TokenKind::Newline && kind != TokenKind::Indent && kind != TokenKind::Dedent) {
            line_has_tokens_ = true;
        }
        return tokens_.back();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    int depth_ = 0;
    std::vector<std::size_t> opened_;
    bool at_line_start_ = true;
    bool line_has_tokens_ = false;
    std::vector<int> indents_{0};
    std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source)
{
    return Lexer(source).run();
}

}  // namespace testgen::lang
