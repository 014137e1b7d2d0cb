#include "tgl/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace tgl {

ParseError::ParseError(std::string msg, int line, int column)
    : std::runtime_error(std::move(msg) + " at " + std::to_string(line) + ":" +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum Kind { punct, label, end } kind = end;
    char ch = 0;        // for punct: ( ) , ;
    std::string text;   // for label
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) {
            tok.kind = Token::end;
            return tok;
        }
        const char c = text_[pos_];
        if (c == '(' || c == ')' || c == ',' || c == ';') {
            advance();
            tok.kind = Token::punct;
            tok.ch = c;
            return tok;
        }
        tok.kind = Token::label;
        while (pos_ < text_.size() && !is_ws(text_[pos_]) && text_[pos_] != '(' &&
               text_[pos_] != ')' && text_[pos_] != ',' && text_[pos_] != ';') {
            tok.text += text_[pos_];
            advance();
        }
        return tok;
    }

private:
    static bool is_ws(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < text_.size() && is_ws(text_[pos_])) advance();
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

[[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.line, at.column);
}

// tree := label | '(' tree ',' tree ')'
// Parsed iteratively; node ids are assigned in completion (post) order.
BinaryTree parse_tree_tokens(Lexer& lex, Token& tok) {
    std::vector<TreeNode> nodes;
    std::vector<int> done;       // completed subtrees awaiting a parent
    std::vector<int> open;       // '(' nesting: count of completed children inside
    for (;;) {
        if (tok.kind == Token::punct && tok.ch == '(') {
            open.push_back(0);
            tok = lex.next();
            continue;
        }
        if (tok.kind == Token::label) {
            nodes.push_back(TreeNode{-1, -1, -1, tok.text});
            done.push_back(static_cast<int>(nodes.size()) - 1);
            if (!open.empty()) ++open.back();
            tok = lex.next();
        } else {
            fail("expected a leaf label or '('", tok);
        }
        // After a completed subtree: either ',' (first child done) or ')'
        // (second child done), possibly repeatedly.
        for (;;) {
            if (open.empty()) return BinaryTree::from_nodes(std::move(nodes), done.back());
            if (tok.kind == Token::punct && tok.ch == ',') {
                if (open.back() != 1) fail("expected ')'", tok);
                tok = lex.next();
                break;  // parse the second child
            }
            if (tok.kind == Token::punct && tok.ch == ')') {
                if (open.back() != 2) fail("expected ','", tok);
                const int right = done.back();
                done.pop_back();
                const int left = done.back();
                done.pop_back();
                const int v = static_cast<int>(nodes.size());
                nodes.push_back(TreeNode{-1, left, right, {}});
                nodes[left].parent = v;
                nodes[right].parent = v;
                done.push_back(v);
                open.pop_back();
                if (!open.empty()) ++open.back();
                tok = lex.next();
                continue;
            }
            if (open.back() == 1) fail("expected ','", tok);
            fail("expected ')'", tok);
        }
    }
}

BinaryTree parse_tree_text(std::string_view text, bool allow_semicolon) {
    Lexer lex(text);
    Token tok = lex.next();
    BinaryTree t;
    try {
        t = parse_tree_tokens(lex, tok);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), tok.line, tok.column);
    }
    if (allow_semicolon && tok.kind == Token::punct && tok.ch == ';') tok = lex.next();
    if (tok.kind != Token::end) fail("trailing input after tree", tok);
    return t;
}

void write_tree(std::string& out, const BinaryTree& t) {
    // Iterative serialization in stored child order.
    struct Item {
        int node;
        int stage;  // 0 enter, 1 between children, 2 exit
    };
    std::vector<Item> stack{{t.root(), 0}};
    while (!stack.empty()) {
        Item& it = stack.back();
        if (t.is_leaf(it.node)) {
            out += t.label(it.node);
            stack.pop_back();
            continue;
        }
        if (it.stage == 0) {
            out += '(';
            it.stage = 1;
            stack.push_back({t.left_child(it.node), 0});
        } else if (it.stage == 1) {
            out += ',';
            it.stage = 2;
            stack.push_back({t.right_child(it.node), 0});
        } else {
            out += ')';
            stack.pop_back();
        }
    }
}

}  // namespace

BinaryTree build_tree(std::string_view spec) {
    return parse_tree_text(spec, /*allow_semicolon=*/true);
}

Tanglegram parse_tanglegram(std::string_view text) {
    Lexer lex(text);
    Token tok = lex.next();
    if (tok.kind != Token::label || tok.text != "tgl") fail("expected header 'tgl v1'", tok);
    tok = lex.next();
    if (tok.kind != Token::label || tok.text != "v1") fail("unsupported format version", tok);
    tok = lex.next();

    BinaryTree trees[2];
    for (BinaryTree& t : trees) {
        try {
            t = parse_tree_tokens(lex, tok);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), tok.line, tok.column);
        }
        if (!(tok.kind == Token::punct && tok.ch == ';')) fail("expected ';' after tree", tok);
        tok = lex.next();
    }
    if (tok.kind != Token::end) fail("trailing input after right tree", tok);

    try {
        return Tanglegram::from_trees(std::move(trees[0]), std::move(trees[1]));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), tok.line, tok.column);
    }
}

std::string serialize_tree(const BinaryTree& t) {
    std::string out;
    write_tree(out, t);
    return out;
}

std::string serialize_tanglegram(const Tanglegram& t) {
    std::string out = "tgl v1\n";
    write_tree(out, t.left());
    out += ";\n";
    write_tree(out, t.right());
    out += ";\n";
    return out;
}

Tanglegram read_tanglegram_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_tanglegram(ss.str());
}

}  // namespace tgl
