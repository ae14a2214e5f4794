use cmreg::theorems::hyp;
use cmreg::{AlgebraError, CoefficientField, GradedModule, Ideal, PolyRing, Polynomial, QuotientRing};

use super::{
    Arg, Command, CommandKind, Flags, Location, Object, ParseError, ParseErrors, SessionSpec, Theorem,
};

/// A piece of the source with its byte offset.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    offset: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            offset: self.offset + lead,
        }
    }

    fn slice(self, from: usize, to: usize) -> Span<'a> {
        Span {
            text: &self.text[from..to],
            offset: self.offset + from,
        }
    }

    fn from(self, from: usize) -> Span<'a> {
        self.slice(from, self.text.len())
    }
}

struct Parser<'a> {
    src: &'a str,
    errors: Vec<ParseError>,
    spec: SessionSpec,
    current_ring: Option<String>,
}

type Step<T> = std::result::Result<T, ParseError>;

/// Parse and validate a session. Every statement is checked, so the error
/// list covers the whole input.
pub fn parse_session(text: &str) -> Result<SessionSpec, ParseErrors> {
    let clean = strip_comments(text);
    let mut p = Parser {
        src: text,
        errors: Vec::new(),
        spec: SessionSpec::default(),
        current_ring: None,
    };
    let stmts = match split_statements(&clean) {
        Ok(s) => s,
        Err((off, msg)) => {
            return Err(ParseErrors(vec![ParseError {
                at: locate(text, off),
                message: msg,
            }]))
        }
    };
    for s in stmts {
        if let Err(e) = p.statement(s) {
            p.errors.push(e);
        }
    }
    if p.errors.is_empty() {
        Ok(p.spec)
    } else {
        Err(ParseErrors(p.errors))
    }
}

fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for c in text.chars() {
        if c == '\n' {
            in_comment = false;
        } else if c == '#' {
            in_comment = true;
        }
        if in_comment {
            for _ in 0..c.len_utf8() {
                out.push(' ');
            }
        } else {
            out.push(c);
        }
    }
    out
}

fn locate(src: &str, offset: usize) -> Location {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    Location {
        line,
        col: before[line_start..].chars().count() + 1,
    }
}

fn split_statements(src: &str) -> Result<Vec<Span<'_>>, (usize, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err((i, "unbalanced `)`".into()));
                }
            }
            ';' if depth == 0 => {
                let s = Span { text: &src[start..i], offset: start }.trim();
                if !s.text.is_empty() {
                    out.push(s);
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    let rest = Span { text: &src[start..], offset: start }.trim();
    if depth > 0 {
        return Err((rest.offset, "unbalanced `(`".into()));
    }
    if !rest.text.is_empty() {
        return Err((rest.offset, "statement is missing its terminating `;`".into()));
    }
    Ok(out)
}

/// Split at top-level occurrences of `sep` (or whitespace when `sep` is None).
fn split_top(s: Span<'_>, sep: Option<char>) -> Vec<Span<'_>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let hit = depth == 0
            && match sep {
                Some(ch) => c == ch,
                None => c.is_whitespace(),
            };
        if hit {
            out.push(s.slice(start, i).trim());
            start = i + c.len_utf8();
        }
    }
    out.push(s.from(start).trim());
    if sep.is_none() {
        out.retain(|t| !t.text.is_empty());
    }
    out
}

fn find_top(s: &str, ch: char) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == ch && depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn is_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// `head(inner)` with the whole span consumed.
fn call<'a>(s: Span<'a>, head: &str) -> Option<Span<'a>> {
    let t = s.text;
    if t.starts_with(head) && t[head.len()..].trim_start().starts_with('(') && t.ends_with(')') {
        let open = head.len() + t[head.len()..].find('(').unwrap();
        Some(s.slice(open + 1, t.len() - 1))
    } else {
        None
    }
}

/// The inside of `( ... )` when the opening parenthesis closes at the end.
fn parenthesized(s: Span<'_>) -> Option<Span<'_>> {
    if !s.text.starts_with('(') {
        return None;
    }
    let mut depth = 0i32;
    for (i, c) in s.text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return (i + 1 == s.text.len()).then(|| s.slice(1, i));
                }
            }
            _ => {}
        }
    }
    None
}

impl<'a> Parser<'a> {
    fn err(&self, at: Span<'_>, message: impl Into<String>) -> ParseError {
        ParseError {
            at: locate(self.src, at.offset),
            message: message.into(),
        }
    }

    fn statement(&mut self, s: Span<'_>) -> Step<()> {
        let words = split_top(s, None);
        let head = words[0];
        match head.text {
            "seed" => {
                let v = s.from(4).trim();
                self.spec.seed = v
                    .text
                    .parse()
                    .map_err(|_| self.err(v, format!("seed must be a non-negative integer, got `{}`", v.text)))?;
                Ok(())
            }
            "ring" | "ideal" | "module" => self.declaration(s, head.text),
            "cmd" => {
                let c = self.command(s.from(3).trim())?;
                self.spec.commands.push(c);
                Ok(())
            }
            other => Err(self.err(
                head,
                format!("unknown statement `{other}` (expected ring, ideal, module, cmd or seed)"),
            )),
        }
    }

    fn declaration(&mut self, s: Span<'_>, kind: &str) -> Step<()> {
        let Some(eq) = find_top(s.text, '=') else {
            return Err(self.err(s, format!("expected `{kind} NAME = ...`")));
        };
        let lhs = split_top(s.slice(kind.len(), eq), None);
        let rhs = s.from(eq + 1).trim();
        let name = *lhs.first().ok_or_else(|| self.err(s, "missing name"))?;
        if !is_name(name.text) {
            return Err(self.err(name, format!("`{}` is not a valid name", name.text)));
        }
        if self.spec.get(name.text).is_some() {
            return Err(self.err(name, format!("`{}` is already declared", name.text)));
        }
        let obj = match kind {
            "ring" => {
                if lhs.len() > 1 {
                    return Err(self.err(lhs[1], "unexpected text before `=`"));
                }
                Object::Ring(self.ring_expr(rhs)?)
            }
            "ideal" => {
                let ring = match lhs.len() {
                    1 => self.current(name)?,
                    3 if lhs[1].text == "in" => self.ring_named(lhs[2])?,
                    _ => return Err(self.err(lhs[1], "expected `ideal NAME [in RING] = (...)`")),
                };
                Object::Ideal(self.ideal_expr(rhs, &ring)?)
            }
            _ => {
                if lhs.len() > 1 {
                    return Err(self.err(lhs[1], "unexpected text before `=`"));
                }
                Object::Module(self.module_expr(rhs)?)
            }
        };
        if let Object::Ring(_) = obj {
            self.current_ring = Some(name.text.to_string());
        }
        self.spec.objects.push((name.text.to_string(), obj));
        Ok(())
    }

    fn current(&self, at: Span<'_>) -> Step<QuotientRing> {
        match &self.current_ring {
            Some(n) => match self.spec.get(n) {
                Some(Object::Ring(r)) => Ok(r.clone()),
                _ => unreachable!("current ring is always declared"),
            },
            None => Err(self.err(at, "no ring has been declared yet")),
        }
    }

    fn lookup(&self, name: Span<'_>) -> Step<&Object> {
        self.spec
            .get(name.text)
            .ok_or_else(|| self.err(name, format!("`{}` is not declared", name.text)))
    }

    fn ring_named(&self, name: Span<'_>) -> Step<QuotientRing> {
        match self.lookup(name)? {
            Object::Ring(r) => Ok(r.clone()),
            o => Err(self.err(name, format!("`{}` is a {}, expected a ring", name.text, o.kind()))),
        }
    }

    fn field(&self, s: Span<'_>) -> Step<CoefficientField> {
        if s.text == "QQ" {
            return Ok(CoefficientField::Rationals);
        }
        if let Some(inner) = call(s, "GF") {
            let inner = inner.trim();
            let p: u64 = inner
                .text
                .parse()
                .map_err(|_| self.err(inner, format!("`{}` is not a positive integer", inner.text)))?;
            return CoefficientField::prime(p).map_err(|e| self.err(inner, e.to_string()));
        }
        Err(self.err(s, format!("unknown field `{}` (expected QQ or GF(p))", s.text)))
    }

    fn ring_expr(&self, s: Span<'_>) -> Step<QuotientRing> {
        if let Some(inner) = call(s, "poly") {
            let parts = split_top(inner, Some(','));
            if parts.len() != 2 {
                return Err(self.err(inner, "expected poly(FIELD, NVARS)"));
            }
            let field = self.field(parts[0])?;
            let n: usize = parts[1]
                .text
                .parse()
                .ok()
                .filter(|n| *n > 0)
                .ok_or_else(|| self.err(parts[1], format!("`{}` is not a positive variable count", parts[1].text)))?;
            return Ok(QuotientRing::polynomial(PolyRing::new(field, n)));
        }
        if let Some(slash) = find_top(s.text, '/') {
            let base_name = s.slice(0, slash).trim();
            let base = self.ring_named(base_name)?;
            let rel = s.from(slash + 1).trim();
            let mut gens = base.defining_ideal().to_vec();
            gens.extend(self.relations(rel, &base)?);
            return QuotientRing::new(base.ambient(), gens).map_err(|e| self.err(rel, e.to_string()));
        }
        if is_name(s.text) {
            return self.ring_named(s);
        }
        Err(self.err(s, "expected poly(FIELD, N), RING/(...) or RING/IDEAL"))
    }

    /// The right side of `RING/...`: an ideal name or a generator list.
    fn relations(&self, s: Span<'_>, ring: &QuotientRing) -> Step<Vec<Polynomial>> {
        if is_name(s.text) {
            return match self.lookup(s)? {
                Object::Ideal(i) => {
                    ring.same_ring(i.ring()).map_err(|e| self.err(s, e.to_string()))?;
                    Ok(i.gens().to_vec())
                }
                o => Err(self.err(s, format!("`{}` is a {}, expected an ideal", s.text, o.kind()))),
            };
        }
        self.generators(s, ring)
    }

    fn generators(&self, s: Span<'_>, ring: &QuotientRing) -> Step<Vec<Polynomial>> {
        let inner = parenthesized(s).ok_or_else(|| self.err(s, "expected a generator list `( ... )`"))?;
        if inner.text.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for g in split_top(inner, Some(',')) {
            if g.text.is_empty() {
                return Err(self.err(g, "empty generator"));
            }
            let f = ring.parse(g.text).map_err(|e| match e {
                AlgebraError::Parse(m) => self.err(g, format!("cannot parse `{}`: {m}", g.text)),
                e => self.err(g, e.to_string()),
            })?;
            if !f.is_homogeneous() {
                let degs: Vec<String> = f.term_degrees().iter().map(|d| d.to_string()).collect();
                return Err(self.err(
                    g,
                    format!("generator `{}` is not homogeneous (term degrees {})", g.text, degs.join(", ")),
                ));
            }
            out.push(f);
        }
        Ok(out)
    }

    fn ideal_expr(&self, s: Span<'_>, ring: &QuotientRing) -> Step<Ideal> {
        if is_name(s.text) {
            return self.ideal_named(s);
        }
        let gens = self.generators(s, ring)?;
        Ideal::new(ring, gens).map_err(|e| self.err(s, e.to_string()))
    }

    fn ideal_named(&self, s: Span<'_>) -> Step<Ideal> {
        match self.lookup(s)? {
            Object::Ideal(i) => Ok(i.clone()),
            o => Err(self.err(s, format!("`{}` is a {}, expected an ideal", s.text, o.kind()))),
        }
    }

    fn module_expr(&self, s: Span<'_>) -> Step<GradedModule> {
        if let Some(inner) = call(s, "residue") {
            return Ok(GradedModule::residue_field(&self.ring_named(inner.trim())?));
        }
        if let Some(slash) = find_top(s.text, '/') {
            let ring = self.ring_named(s.slice(0, slash).trim())?;
            let rel = s.from(slash + 1).trim();
            let gens = self.relations(rel, &ring)?;
            return GradedModule::cyclic(&ring, &gens).map_err(|e| self.err(rel, e.to_string()));
        }
        if is_name(s.text) {
            return match self.lookup(s)? {
                Object::Module(m) => Ok(m.clone()),
                Object::Ring(r) => Ok(GradedModule::ring_module(r)),
                Object::Ideal(i) => Ok(i.as_module()),
            };
        }
        Err(self.err(s, "expected a module: NAME, RING, RING/IDEAL, RING/(...) or residue(RING)"))
    }

    fn command(&self, s: Span<'_>) -> Step<Command> {
        let words = split_top(s, None);
        let Some(&head) = words.first() else {
            return Err(self.err(s, "empty command"));
        };
        let mut rest = &words[1..];
        let kind = match head.text {
            "betti" => CommandKind::Betti,
            "reg" => CommandKind::Reg,
            "ainv" => CommandKind::Ainv,
            "tor" => CommandKind::Tor,
            "frobenius" => CommandKind::Frobenius,
            "power" => CommandKind::Power,
            "saturate" => CommandKind::Saturate,
            "kahler" => CommandKind::Kahler,
            "verify" | "fuzz" => {
                let Some(&id) = rest.first() else {
                    return Err(self.err(head, format!("`{}` needs a theorem id", head.text)));
                };
                rest = &rest[1..];
                let t = Theorem::from_id(id.text).ok_or_else(|| {
                    let ids: Vec<&str> = Theorem::ALL.iter().map(|t| t.id()).collect();
                    self.err(id, format!("unknown theorem `{}` (known: {})", id.text, ids.join(", ")))
                })?;
                if head.text == "verify" {
                    CommandKind::Verify(t)
                } else {
                    CommandKind::Fuzz(t)
                }
            }
            other => {
                return Err(self.err(
                    head,
                    format!(
                        "unknown command `{other}` (expected betti, reg, ainv, tor, frobenius, power, saturate, kahler, verify or fuzz)"
                    ),
                ))
            }
        };
        let split = rest.iter().position(|w| w.text.starts_with("--")).unwrap_or(rest.len());
        let flags = self.flags(&rest[split..])?;
        let args = self.arguments(kind, &rest[..split], s)?;
        Ok(Command {
            at: locate(self.src, s.offset),
            text: s.text.split_whitespace().collect::<Vec<_>>().join(" "),
            kind,
            args,
            flags,
        })
    }

    fn flags(&self, words: &[Span<'_>]) -> Step<Flags> {
        let mut f = Flags::default();
        let mut k = 0;
        while k < words.len() {
            let w = words[k];
            if !w.text.starts_with("--") {
                return Err(self.err(w, format!("unexpected argument `{}` after flags", w.text)));
            }
            if w.text == "--" {
                return Err(self.err(w, "empty flag"));
            }
            let val = words
                .get(k + 1)
                .copied()
                .filter(|v| !v.text.starts_with("--"))
                .ok_or_else(|| self.err(w, format!("flag `{}` needs a value", w.text)))?;
            let num = |v: Span<'_>| -> Step<u64> {
                v.text
                    .parse()
                    .map_err(|_| self.err(v, format!("`{}` is not a non-negative integer", v.text)))
            };
            match w.text {
                "--window" => {
                    let (a, b) = val
                        .text
                        .split_once("..")
                        .and_then(|(a, b)| Some((a.parse::<i64>().ok()?, b.parse::<i64>().ok()?)))
                        .filter(|(a, b)| a <= b)
                        .ok_or_else(|| self.err(val, format!("expected a degree window `a..b`, got `{}`", val.text)))?;
                    f.window = Some((a, b));
                }
                "--cap" => f.cap = Some(num(val)? as usize),
                "--emax" => f.emax = Some(num(val)? as u32),
                "--max" => f.max = Some(num(val)? as u32),
                "--index" => f.index = Some(num(val)? as usize),
                "--count" => f.count = Some(num(val)? as usize),
                "--assert" => {
                    let (name, v) = val.text.split_once('=').unwrap_or((val.text, "true"));
                    if !hyp::ALL.contains(&name) {
                        return Err(self.err(
                            val,
                            format!("unknown hypothesis `{name}` (known: {})", hyp::ALL.join(", ")),
                        ));
                    }
                    match v {
                        "true" => f.assertions.push(name.to_string()),
                        "false" => {}
                        _ => return Err(self.err(val, format!("expected `{name}=true`, got `{}`", val.text))),
                    }
                }
                other => return Err(self.err(w, format!("unknown flag `{other}`"))),
            }
            k += 2;
        }
        Ok(f)
    }

    fn arg_ring(&self, w: Span<'_>) -> Step<Arg> {
        Ok(Arg {
            text: w.text.to_string(),
            object: Object::Ring(self.ring_named(w)?),
        })
    }

    fn arg_ideal(&self, w: Span<'_>) -> Step<Arg> {
        let i = if is_name(w.text) {
            self.ideal_named(w)?
        } else {
            self.ideal_expr(w, &self.current(w)?)?
        };
        Ok(Arg {
            text: w.text.to_string(),
            object: Object::Ideal(i),
        })
    }

    fn arg_module(&self, w: Span<'_>) -> Step<Arg> {
        Ok(Arg {
            text: w.text.to_string(),
            object: Object::Module(self.module_expr(w)?),
        })
    }

    fn arguments(&self, kind: CommandKind, words: &[Span<'_>], whole: Span<'_>) -> Step<Vec<Arg>> {
        use Theorem as T;
        #[derive(Clone, Copy, PartialEq)]
        enum K {
            R,
            I,
            M,
        }
        let (shape, variadic): (&[K], Option<K>) = match kind {
            CommandKind::Betti | CommandKind::Reg | CommandKind::Ainv | CommandKind::Frobenius => (&[K::M], None),
            CommandKind::Tor => (&[K::M], Some(K::M)),
            CommandKind::Power | CommandKind::Saturate => (&[K::I], None),
            CommandKind::Kahler => (&[K::R], None),
            CommandKind::Fuzz(_) => (&[K::R], None),
            CommandKind::Verify(t) => match t {
                T::Regfpd | T::Frobenius | T::BettiTransfer | T::Estbetti => (&[K::M], None),
                T::Regtor | T::Rigidity => (&[K::M, K::M], Some(K::M)),
                T::Regtorgen => (&[K::M], Some(K::M)),
                T::Nonacyclic => (&[K::I, K::M], None),
                T::Koszul => (&[K::M, K::I], None),
                T::KoszulPair => (&[K::I, K::I], None),
                T::Intersection => (&[K::I], Some(K::I)),
                T::PowerCd1 | T::PowerDim2 | T::PowerKernel => (&[K::I], None),
                T::Kahler => (&[K::R], None),
            },
        };
        let mut words = words;
        // An optional leading ring names the context for the remaining arguments
        // of fixed-arity commands.
        let mut context: Option<(Span<'_>, QuotientRing)> = None;
        if shape[0] != K::R && variadic.is_none() && words.len() > shape.len() {
            if let Some(Object::Ring(r)) = words.first().and_then(|w| self.spec.get(w.text)) {
                context = Some((words[0], r.clone()));
                words = &words[1..];
            }
        }
        if words.len() < shape.len() || (variadic.is_none() && words.len() > shape.len()) {
            let names = |k: &K| match k {
                K::R => "RING",
                K::I => "IDEAL",
                K::M => "MODULE",
            };
            let mut usage: Vec<&str> = shape.iter().map(names).collect();
            if let Some(v) = variadic {
                usage.push(names(&v));
                usage.push("...");
            }
            let at = words.get(shape.len()).copied().unwrap_or(whole);
            return Err(self.err(
                at,
                format!("expected {} argument(s): {}", shape.len(), usage.join(" ")),
            ));
        }
        let mut out = Vec::new();
        for (k, w) in words.iter().enumerate() {
            let want = shape.get(k).copied().or(variadic).unwrap();
            let a = match want {
                K::R => self.arg_ring(*w)?,
                K::I => self.arg_ideal(*w)?,
                K::M => self.arg_module(*w)?,
            };
            if let Some((at, ring)) = &context {
                let r = match &a.object {
                    Object::Ring(r) => r,
                    Object::Ideal(i) => i.ring(),
                    Object::Module(m) => m.ring(),
                };
                if ring.same_ring(r).is_err() {
                    return Err(self.err(*w, format!("`{}` is not over `{}`", w.text, at.text)));
                }
            }
            out.push(a);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_session() {
        let spec = parse_session("ring R = poly(QQ, 2); ideal I = (x0^2, x0*x1); cmd betti R/I;").unwrap();
        assert_eq!(spec.commands.len(), 1);
        assert_eq!(spec.commands[0].kind, CommandKind::Betti);
        assert_eq!(spec.objects.len(), 2);
    }

    #[test]
    fn non_prime_field() {
        let e = parse_session("ring R = poly(GF(4), 2);").unwrap_err();
        assert_eq!(e.0.len(), 1);
        assert_eq!(e.0[0].message, "4 is not prime");
        assert_eq!(e.0[0].at, Location { line: 1, col: 18 });
    }

    #[test]
    fn inhomogeneous_generator_is_located() {
        let e = parse_session("ring R = poly(QQ, 2);\nideal I = (x0^2, x0 + 1);").unwrap_err();
        assert_eq!(e.0[0].at, Location { line: 2, col: 18 });
        assert!(e.0[0].message.contains("not homogeneous"));
        assert!(e.0[0].message.contains("1, 0"));
    }

    #[test]
    fn undeclared_and_duplicate_names() {
        let e = parse_session("ring R = poly(QQ, 2); ring R = poly(QQ, 3); cmd betti M;").unwrap_err();
        assert_eq!(e.0.len(), 2);
        assert!(e.0[0].message.contains("already declared"));
        assert!(e.0[1].message.contains("`M` is not declared"));
    }

    #[test]
    fn comments_flags_and_contexts() {
        let text = "# header\nring R = poly(GF(2), 2); # trailing\nmodule M = R/(x0, x1);\n\
                    cmd verify frobenius R M --emax 2 --assert equidimensional=true;\n\
                    cmd tor M M --window -2..6 --index 1;\nseed 9;";
        let spec = parse_session(text).unwrap();
        assert_eq!(spec.seed, 9);
        let c = &spec.commands[0];
        assert_eq!(c.kind, CommandKind::Verify(Theorem::Frobenius));
        assert_eq!(c.args.len(), 1);
        assert_eq!(c.flags.emax, Some(2));
        assert_eq!(c.flags.assertions, vec!["equidimensional".to_string()]);
        assert_eq!(spec.commands[1].flags.window, Some((-2, 6)));
        assert_eq!(spec.commands[1].at, Location { line: 5, col: 5 });
    }

    #[test]
    fn quotient_rings_and_residue_fields() {
        let text = "ring R = poly(QQ, 3); ring S = R/(x0^2 + x1^2 + x2^2); ideal L in S = (x0);\n\
                    module K = residue(S); module N = S/L; cmd verify regtor K N; cmd kahler S;";
        let spec = parse_session(text).unwrap();
        assert_eq!(spec.commands.len(), 2);
        match spec.get("S") {
            Some(Object::Ring(s)) => assert_eq!(s.defining_ideal().len(), 1),
            _ => panic!("S should be a ring"),
        }
    }

    #[test]
    fn structural_errors() {
        assert!(parse_session("ring R = poly(QQ, 2)").unwrap_err().0[0].message.contains("`;`"));
        assert!(parse_session("ring R = poly(QQ, 2));").is_err());
        assert!(parse_session("ring R = poly(ZZ, 2);").unwrap_err().0[0].message.contains("unknown field"));
        let e = parse_session("ring R = poly(QQ, 2); cmd verify nope R;").unwrap_err();
        assert!(e.0[0].message.contains("unknown theorem"));
        let e = parse_session("ring R = poly(QQ, 2); cmd betti R --bogus 1;").unwrap_err();
        assert!(e.0[0].message.contains("unknown flag"));
        let e = parse_session("ring R = poly(QQ, 2); cmd betti R --assert nothing=true;").unwrap_err();
        assert!(e.0[0].message.contains("unknown hypothesis"));
        let e = parse_session("ring R = poly(QQ, 2); ideal I = (x0); cmd verify regtor R/I;").unwrap_err();
        assert!(e.0[0].message.contains("expected 2 argument(s)"));
        let e = parse_session("ring R = poly(QQ, 2); ideal I = (x9);").unwrap_err();
        assert!(e.0[0].message.contains("cannot parse"));
    }
}
