// Client-side mirror of the server's move grammar, for live feedback only.
// The server remains the authority on every move; nothing here touches the
// quotient ring. Grammar:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*'? factor)*
//   factor := uint | var ('^' uint)? | '(' expr ')'
//   var    := [a-zA-Z][a-zA-Z0-9]*
//
// Identifiers are longest-match, so "xy" is one variable, not x*y.
// '^' binds to a variable only; powers of sums must be written as products.
// Positions in errors are 0-based character offsets, as the server reports.

export type Ast =
  | { kind: "num"; value: number }
  | { kind: "var"; name: string; pos: number }
  | { kind: "pow"; name: string; pos: number; exp: number }
  | { kind: "neg"; arg: Ast }
  | { kind: "add"; left: Ast; right: Ast }
  | { kind: "sub"; left: Ast; right: Ast }
  | { kind: "mul"; left: Ast; right: Ast };

export type ParseOutcome =
  | { ok: true; ast: Ast }
  | { ok: false; pos: number; message: string };

interface Token {
  kind: "num" | "ident" | "op";
  text: string;
  pos: number;
}

function tokenize(text: string): Token[] | { pos: number; message: string } {
  const out: Token[] = [];
  let i = 0;
  while (i < text.length) {
    const c = text[i]!;
    if (c === " " || c === "\t") {
      i += 1;
      continue;
    }
    if (c >= "0" && c <= "9") {
      let j = i + 1;
      while (j < text.length && text[j]! >= "0" && text[j]! <= "9") j += 1;
      out.push({ kind: "num", text: text.slice(i, j), pos: i });
      i = j;
      continue;
    }
    if (/[a-zA-Z]/.test(c)) {
      let j = i + 1;
      while (j < text.length && /[a-zA-Z0-9]/.test(text[j]!)) j += 1;
      out.push({ kind: "ident", text: text.slice(i, j), pos: i });
      i = j;
      continue;
    }
    if ("+-*^()".includes(c)) {
      out.push({ kind: "op", text: c, pos: i });
      i += 1;
      continue;
    }
    return { pos: i, message: `unexpected character ${JSON.stringify(c)}` };
  }
  return out;
}

export function parseExpr(text: string): ParseOutcome {
  const toks = tokenize(text);
  if (!Array.isArray(toks)) return { ok: false, ...toks };
  let k = 0;
  const end = text.length;

  const peek = (): Token | null => toks[k] ?? null;
  const at = (op: string): boolean => {
    const t = peek();
    return t !== null && t.kind === "op" && t.text === op;
  };

  function fail(pos: number, message: string): never {
    throw { pos, message };
  }

  function factor(): Ast {
    const t = peek();
    if (t === null) fail(end, "expected a number, variable, or '('");
    if (t.kind === "num") {
      k += 1;
      return { kind: "num", value: parseInt(t.text, 10) };
    }
    if (t.kind === "ident") {
      k += 1;
      if (at("^")) {
        k += 1;
        const e = peek();
        if (e === null || e.kind !== "num") {
          fail(e?.pos ?? end, "'^' must be followed by a number");
        }
        k += 1;
        return { kind: "pow", name: t.text, pos: t.pos, exp: parseInt(e.text, 10) };
      }
      return { kind: "var", name: t.text, pos: t.pos };
    }
    if (t.text === "(") {
      k += 1;
      const inner = expr();
      if (!at(")")) fail(peek()?.pos ?? end, "expected ')'");
      k += 1;
      return inner;
    }
    fail(t.pos, `expected a number, variable, or '(', got ${JSON.stringify(t.text)}`);
  }

  function startsFactor(): boolean {
    const t = peek();
    return t !== null && (t.kind === "num" || t.kind === "ident" || (t.kind === "op" && t.text === "("));
  }

  function term(): Ast {
    let left = factor();
    for (;;) {
      if (at("*")) {
        k += 1;
        left = { kind: "mul", left, right: factor() };
      } else if (startsFactor()) {
        left = { kind: "mul", left, right: factor() };
      } else {
        return left;
      }
    }
  }

  function expr(): Ast {
    let left: Ast;
    if (at("-")) {
      k += 1;
      left = { kind: "neg", arg: term() };
    } else {
      left = term();
    }
    while (at("+") || at("-")) {
      const op = peek()!.text;
      k += 1;
      const right = term();
      left = op === "+" ? { kind: "add", left, right } : { kind: "sub", left, right };
    }
    return left;
  }

  try {
    const ast = expr();
    const rest = peek();
    if (rest !== null) {
      return { ok: false, pos: rest.pos, message: `unexpected ${JSON.stringify(rest.text)}` };
    }
    return { ok: true, ast };
  } catch (e) {
    const err = e as { pos: number; message: string };
    return { ok: false, pos: err.pos, message: err.message };
  }
}

/** First variable in the text that is not one of `known`, if any. */
export function unknownVariable(ast: Ast, known: readonly string[]): { name: string; pos: number } | null {
  const bad: { name: string; pos: number }[] = [];
  const walk = (node: Ast): void => {
    switch (node.kind) {
      case "var":
      case "pow":
        if (!known.includes(node.name)) bad.push({ name: node.name, pos: node.pos });
        return;
      case "neg":
        walk(node.arg);
        return;
      case "add":
      case "sub":
      case "mul":
        walk(node.left);
        walk(node.right);
        return;
      case "num":
        return;
    }
  };
  walk(ast);
  if (bad.length === 0) return null;
  bad.sort((a, b) => a.pos - b.pos);
  return bad[0]!;
}

/**
 * Value of the expression with every variable set to zero, mod p. A nonzero
 * result means the move has a nonzero constant term, which in the local rings
 * served here makes it a unit (an immediate loss); the UI uses this to raise
 * the confirmation modal before submitting. Purely syntactic, the server
 * still decides.
 */
export function constantTerm(ast: Ast, p: number): number {
  const mod = (v: number): number => ((v % p) + p) % p;
  switch (ast.kind) {
    case "num":
      return mod(ast.value);
    case "var":
      return 0;
    case "pow":
      return ast.exp === 0 ? mod(1) : 0;
    case "neg":
      return mod(-constantTerm(ast.arg, p));
    case "add":
      return mod(constantTerm(ast.left, p) + constantTerm(ast.right, p));
    case "sub":
      return mod(constantTerm(ast.left, p) - constantTerm(ast.right, p));
    case "mul":
      return mod(constantTerm(ast.left, p) * constantTerm(ast.right, p));
  }
}

/** Variable names declared by a presentation string such as "K[x,y]/(...)". */
export function presentationVariables(presentation: string): string[] {
  const m = presentation.match(/^K\[([^\]]*)\]/);
  if (m === null) return [];
  return m[1]!.split(",").map((s) => s.trim()).filter((s) => s.length > 0);
}
