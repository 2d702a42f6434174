//! A PostScript subset validator and interpreter for EPS pages.
//!
//! The page body is executed by a small interpreter with typed operand
//! checking over a fixed operator set. The prolog is checked syntactically
//! only: it may use a wider operator set, and any procedure it defines is
//! callable from the body. `PT` is the one prolog procedure with known
//! semantics: `(base) (sup) x y size align angle PT` draws a text run.
//!
//! Drawing operations come out in device space (points, y up) with the
//! clip rectangle in force.

use std::collections::HashMap;
use std::fmt;

const HEADER: &str = "%!PS-Adobe-3.0 EPSF-3.0";

/// Operators allowed in the page body.
const BODY_OPS: &[&str] = &[
    "gsave", "grestore", "setlinecap", "setlinejoin", "setrgbcolor", "setlinewidth", "setdash", "newpath",
    "moveto", "lineto", "closepath", "stroke", "fill", "rectfill", "rectclip", "translate", "scale",
    "showpage", "def", "string", "colorimage", "currentfile", "readhexstring", "pop",
];

/// Additional operators the prolog may use.
const PROLOG_OPS: &[&str] = &[
    "findfont", "dup", "length", "dict", "begin", "end", "index", "ne", "ifelse", "forall", "currentdict",
    "definefont", "exch", "rotate", "scalefont", "setfont", "stringwidth", "add", "mul", "neg", "show",
    "rmoveto", "bind", "ISOLatin1Encoding", "def", "pop", "gsave", "grestore", "translate", "moveto",
];

#[derive(Debug, Clone, PartialEq)]
pub struct PsError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for PsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Clip rectangle `[x0, y0, x1, y1]` in device space.
pub type Clip = Option<[f64; 4]>;

#[derive(Debug, Clone, PartialEq)]
pub enum Op {
    Stroke {
        subpaths: Vec<(Vec<(f64, f64)>, bool)>,
        rgb: [f64; 3],
        width: f64,
        dash: Vec<f64>,
        clip: Clip,
    },
    Fill {
        subpaths: Vec<Vec<(f64, f64)>>,
        rgb: [f64; 3],
        clip: Clip,
    },
    Text {
        base: Vec<u8>,
        sup: Vec<u8>,
        x: f64,
        y: f64,
        size: f64,
        align: f64,
        angle: f64,
        rgb: [f64; 3],
        clip: Clip,
    },
    /// `rows` x `cols` RGB samples, row 0 at the top, filling the device
    /// rectangle `[x0, x1] x [y0, y1]`.
    Image {
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
        cols: usize,
        rows: usize,
        rgb: Vec<u8>,
        clip: Clip,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Page {
    pub bbox: [i64; 4],
    pub ops: Vec<Op>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Name(String),
    Lit(String),
    Str(Vec<u8>),
    Open,
    Close,
    ArrOpen,
    ArrClose,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, m: impl Into<String>) -> Result<T, PsError> {
        Err(PsError {
            line: self.line,
            message: m.into(),
        })
    }

    fn bump(&mut self) -> Option<u8> {
        let c = *self.src.get(self.pos)?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Next token, or `None` at end of input. Comments are skipped.
    fn next(&mut self) -> Result<Option<Tok>, PsError> {
        loop {
            match self.peek() {
                None => return Ok(None),
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'%') => {
                    while let Some(c) = self.bump() {
                        if c == b'\n' {
                            break;
                        }
                    }
                }
                Some(_) => break,
            }
        }
        let c = self.bump().expect("peeked");
        Ok(Some(match c {
            b'{' => Tok::Open,
            b'}' => Tok::Close,
            b'[' => Tok::ArrOpen,
            b']' => Tok::ArrClose,
            b'(' => Tok::Str(self.string()?),
            b')' | b'<' | b'>' => return self.err(format!("unexpected {:?}", c as char)),
            b'/' => Tok::Lit(self.word()),
            _ => {
                self.pos -= 1;
                let w = self.word();
                if w.is_empty() {
                    return self.err(format!("unexpected byte {c:#04x}"));
                }
                match w.parse::<f64>() {
                    Ok(v) if w.starts_with(|c: char| c.is_ascii_digit() || "+-.".contains(c)) => Tok::Num(v),
                    _ => Tok::Name(w),
                }
            }
        }))
    }

    fn word(&mut self) -> String {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() || b"(){}[]<>/%".contains(&c) {
                break;
            }
            self.bump();
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn string(&mut self) -> Result<Vec<u8>, PsError> {
        let mut out = Vec::new();
        let mut depth = 0;
        loop {
            let Some(c) = self.bump() else {
                return self.err("unterminated string");
            };
            match c {
                b'(' => {
                    depth += 1;
                    out.push(c);
                }
                b')' if depth == 0 => return Ok(out),
                b')' => {
                    depth -= 1;
                    out.push(c);
                }
                b'\\' => {
                    let Some(e) = self.bump() else {
                        return self.err("unterminated escape");
                    };
                    match e {
                        b'(' | b')' | b'\\' => out.push(e),
                        b'n' => out.push(b'\n'),
                        b'0'..=b'7' => {
                            let mut v = (e - b'0') as u32;
                            for _ in 0..2 {
                                match self.peek() {
                                    Some(d @ b'0'..=b'7') => {
                                        self.bump();
                                        v = v * 8 + (d - b'0') as u32;
                                    }
                                    _ => break,
                                }
                            }
                            if v > 255 {
                                return self.err("octal escape above 255");
                            }
                            out.push(v as u8);
                        }
                        _ => return self.err(format!("unknown escape \\{}", e as char)),
                    }
                }
                _ => out.push(c),
            }
        }
    }

    /// Reads `n` bytes of hex data, skipping whitespace.
    fn hex(&mut self, n: usize) -> Result<Vec<u8>, PsError> {
        let mut out = Vec::with_capacity(n);
        let mut half: Option<u8> = None;
        while out.len() < n {
            let Some(c) = self.bump() else {
                return self.err(format!("image data ended after {} of {n} bytes", out.len()));
            };
            if c.is_ascii_whitespace() {
                continue;
            }
            let d = match (c as char).to_digit(16) {
                Some(d) => d as u8,
                None => return self.err(format!("bad hex digit {:?}", c as char)),
            };
            match half.take() {
                None => half = Some(d),
                Some(h) => out.push(h * 16 + d),
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Obj {
    Num(f64),
    Str(Vec<u8>),
    Lit(String),
    Arr(Vec<Obj>),
    Proc(Vec<Tok>),
    Mark,
    File,
}

impl Obj {
    fn kind(&self) -> &'static str {
        match self {
            Obj::Num(_) => "number",
            Obj::Str(_) => "string",
            Obj::Lit(_) => "name",
            Obj::Arr(_) => "array",
            Obj::Proc(_) => "procedure",
            Obj::Mark => "mark",
            Obj::File => "file",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Ctm([f64; 6]);

impl Ctm {
    fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        let m = self.0;
        (m[0] * x + m[2] * y + m[4], m[1] * x + m[3] * y + m[5])
    }

    fn pre(&self, o: [f64; 6]) -> Ctm {
        let m = self.0;
        Ctm([
            o[0] * m[0] + o[1] * m[2],
            o[0] * m[1] + o[1] * m[3],
            o[2] * m[0] + o[3] * m[2],
            o[2] * m[1] + o[3] * m[3],
            o[4] * m[0] + o[5] * m[2] + m[4],
            o[4] * m[1] + o[5] * m[3] + m[5],
        ])
    }

    fn scale_factor(&self) -> f64 {
        let m = self.0;
        (m[0] * m[3] - m[1] * m[2]).abs().sqrt()
    }
}

#[derive(Debug, Clone)]
struct Gs {
    ctm: Ctm,
    rgb: [f64; 3],
    width: f64,
    dash: Vec<f64>,
    clip: Clip,
    path: Vec<(Vec<(f64, f64)>, bool)>,
}

struct Interp<'a> {
    lx: Lexer<'a>,
    stack: Vec<Obj>,
    gs: Gs,
    saved: Vec<Gs>,
    vars: HashMap<String, Obj>,
    procs: Vec<String>,
    ops: Vec<Op>,
    pages: usize,
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric()
}

impl<'a> Interp<'a> {
    fn err<T>(&self, m: impl Into<String>) -> Result<T, PsError> {
        self.lx.err(m)
    }

    fn pop(&mut self, op: &str) -> Result<Obj, PsError> {
        match self.stack.pop() {
            Some(o) => Ok(o),
            None => self.err(format!("{op}: stack underflow")),
        }
    }

    fn num(&mut self, op: &str) -> Result<f64, PsError> {
        match self.pop(op)? {
            Obj::Num(v) => Ok(v),
            o => self.err(format!("{op}: expected number, found {}", o.kind())),
        }
    }

    fn nums<const N: usize>(&mut self, op: &str) -> Result<[f64; N], PsError> {
        let mut out = [0.0; N];
        for i in (0..N).rev() {
            out[i] = self.num(op)?;
        }
        Ok(out)
    }

    fn string(&mut self, op: &str) -> Result<Vec<u8>, PsError> {
        match self.pop(op)? {
            Obj::Str(s) => Ok(s),
            o => self.err(format!("{op}: expected string, found {}", o.kind())),
        }
    }

    /// Reads a procedure body after `{`.
    fn proc_body(&mut self) -> Result<Vec<Tok>, PsError> {
        let mut out = Vec::new();
        let mut depth = 0;
        loop {
            match self.lx.next()? {
                None => return self.err("unterminated procedure"),
                Some(Tok::Close) if depth == 0 => return Ok(out),
                Some(t) => {
                    match t {
                        Tok::Open => depth += 1,
                        Tok::Close => depth -= 1,
                        _ => {}
                    }
                    out.push(t);
                }
            }
        }
    }

    fn push_point(&mut self, x: f64, y: f64, start: bool) -> Result<(), PsError> {
        let p = self.gs.ctm.apply(x, y);
        if start {
            self.gs.path.push((vec![p], false));
        } else {
            match self.gs.path.last_mut() {
                Some((pts, _)) => pts.push(p),
                None => return self.err("lineto: no current point"),
            }
        }
        Ok(())
    }

    fn rect_pts(&self, x: f64, y: f64, w: f64, h: f64) -> Vec<(f64, f64)> {
        [(x, y), (x + w, y), (x + w, y + h), (x, y + h)]
            .iter()
            .map(|&(a, b)| self.gs.ctm.apply(a, b))
            .collect()
    }

    fn exec(&mut self, name: &str) -> Result<(), PsError> {
        if let Some(v) = self.vars.get(name) {
            let v = v.clone();
            self.stack.push(v);
            return Ok(());
        }
        if self.procs.iter().any(|p| p == name) {
            return if name == "PT" {
                self.text()
            } else {
                self.err(format!("procedure {name} has no known meaning in the page body"))
            };
        }
        if !BODY_OPS.contains(&name) {
            return self.err(format!("operator {name} is outside the subset"));
        }
        match name {
            "gsave" => self.saved.push(self.gs.clone()),
            "grestore" => match self.saved.pop() {
                Some(g) => self.gs = g,
                None => return self.err("grestore without gsave"),
            },
            "setlinecap" | "setlinejoin" => {
                let v = self.num(name)?;
                if !(v == 0.0 || v == 1.0 || v == 2.0) {
                    return self.err(format!("{name}: value {v} out of range"));
                }
            }
            "setrgbcolor" => {
                let c = self.nums::<3>(name)?;
                if c.iter().any(|v| !(0.0..=1.0).contains(v)) {
                    return self.err(format!("setrgbcolor: component out of [0, 1] in {c:?}"));
                }
                self.gs.rgb = c;
            }
            "setlinewidth" => {
                let w = self.num(name)?;
                if w < 0.0 {
                    return self.err("setlinewidth: negative width");
                }
                self.gs.width = w;
            }
            "setdash" => {
                self.num(name)?;
                match self.pop(name)? {
                    Obj::Arr(a) => {
                        let mut d = Vec::new();
                        for o in a {
                            match o {
                                Obj::Num(v) if v >= 0.0 => d.push(v),
                                o => return self.err(format!("setdash: bad element {o:?}")),
                            }
                        }
                        self.gs.dash = d;
                    }
                    o => return self.err(format!("setdash: expected array, found {}", o.kind())),
                }
            }
            "newpath" => self.gs.path.clear(),
            "moveto" => {
                let [x, y] = self.nums::<2>(name)?;
                self.push_point(x, y, true)?;
            }
            "lineto" => {
                let [x, y] = self.nums::<2>(name)?;
                self.push_point(x, y, false)?;
            }
            "closepath" => match self.gs.path.last_mut() {
                Some(sp) => sp.1 = true,
                None => return self.err("closepath: no current path"),
            },
            "stroke" => {
                let subpaths = std::mem::take(&mut self.gs.path);
                self.ops.push(Op::Stroke {
                    subpaths,
                    rgb: self.gs.rgb,
                    width: self.gs.width * self.gs.ctm.scale_factor(),
                    dash: self.gs.dash.iter().map(|d| d * self.gs.ctm.scale_factor()).collect(),
                    clip: self.gs.clip,
                });
            }
            "fill" => {
                let subpaths = std::mem::take(&mut self.gs.path).into_iter().map(|s| s.0).collect();
                self.ops.push(Op::Fill {
                    subpaths,
                    rgb: self.gs.rgb,
                    clip: self.gs.clip,
                });
            }
            "rectfill" => {
                let [x, y, w, h] = self.nums::<4>(name)?;
                self.ops.push(Op::Fill {
                    subpaths: vec![self.rect_pts(x, y, w, h)],
                    rgb: self.gs.rgb,
                    clip: self.gs.clip,
                });
            }
            "rectclip" => {
                let [x, y, w, h] = self.nums::<4>(name)?;
                let pts = self.rect_pts(x, y, w, h);
                let xs = pts.iter().map(|p| p.0);
                let ys = pts.iter().map(|p| p.1);
                let mut r = [
                    xs.clone().fold(f64::INFINITY, f64::min),
                    ys.clone().fold(f64::INFINITY, f64::min),
                    xs.fold(f64::NEG_INFINITY, f64::max),
                    ys.fold(f64::NEG_INFINITY, f64::max),
                ];
                if let Some(c) = self.gs.clip {
                    r = [r[0].max(c[0]), r[1].max(c[1]), r[2].min(c[2]), r[3].min(c[3])];
                }
                self.gs.clip = Some(r);
                self.gs.path.clear();
            }
            "translate" => {
                let [x, y] = self.nums::<2>(name)?;
                self.gs.ctm = self.gs.ctm.pre([1.0, 0.0, 0.0, 1.0, x, y]);
            }
            "scale" => {
                let [x, y] = self.nums::<2>(name)?;
                self.gs.ctm = self.gs.ctm.pre([x, 0.0, 0.0, y, 0.0, 0.0]);
            }
            "showpage" => {
                self.pages += 1;
            }
            "def" => {
                let v = self.pop(name)?;
                match self.pop(name)? {
                    Obj::Lit(k) => {
                        self.vars.insert(k, v);
                    }
                    o => return self.err(format!("def: expected name, found {}", o.kind())),
                }
            }
            "string" => {
                let n = self.num(name)?;
                if n < 0.0 || n.fract() != 0.0 {
                    return self.err("string: bad length");
                }
                self.stack.push(Obj::Str(vec![0; n as usize]));
            }
            "colorimage" => self.image()?,
            "currentfile" => self.stack.push(Obj::File),
            _ => return self.err(format!("{name} is only allowed inside an image data procedure")),
        }
        Ok(())
    }

    fn text(&mut self) -> Result<(), PsError> {
        let [x, y, size, align, angle] = self.nums::<5>("PT")?;
        let sup = self.string("PT")?;
        let base = self.string("PT")?;
        if size <= 0.0 || !(0.0..=1.0).contains(&align) {
            return self.err(format!("PT: bad size {size} or alignment {align}"));
        }
        let (x, y) = self.gs.ctm.apply(x, y);
        self.ops.push(Op::Text {
            base,
            sup,
            x,
            y,
            size: size * self.gs.ctm.scale_factor(),
            align,
            angle,
            rgb: self.gs.rgb,
            clip: self.gs.clip,
        });
        Ok(())
    }

    fn image(&mut self) -> Result<(), PsError> {
        let op = "colorimage";
        let ncomp = self.num(op)?;
        let multi = self.pop(op)?;
        let src = self.pop(op)?;
        let matrix = self.pop(op)?;
        let [cols, rows, bits] = self.nums::<3>(op)?;
        if ncomp != 3.0 || bits != 8.0 {
            return self.err("colorimage: only 8-bit RGB is supported");
        }
        if multi != Obj::Lit("false".into()) {
            return self.err("colorimage: only single-source data is supported");
        }
        let picstr = match &src {
            Obj::Proc(t) => match t.as_slice() {
                [Tok::Name(a), Tok::Name(s), Tok::Name(b), Tok::Name(c)]
                    if a == "currentfile" && b == "readhexstring" && c == "pop" =>
                {
                    s.clone()
                }
                _ => return self.err("colorimage: data procedure must read hex from currentfile"),
            },
            o => return self.err(format!("colorimage: expected procedure, found {}", o.kind())),
        };
        if !matches!(self.vars.get(&picstr), Some(Obj::Str(_))) {
            return self.err(format!("colorimage: {picstr} is not a string"));
        }
        let (cols, rows) = (cols as usize, rows as usize);
        let m: Vec<f64> = match matrix {
            Obj::Arr(a) if a.len() == 6 => a
                .iter()
                .map(|o| match o {
                    Obj::Num(v) => *v,
                    _ => f64::NAN,
                })
                .collect(),
            _ => return self.err("colorimage: matrix must have six numbers"),
        };
        if m != [cols as f64, 0.0, 0.0, -(rows as f64), 0.0, rows as f64] {
            return self.err(format!("colorimage: unsupported image matrix {m:?}"));
        }
        let rgb = self.lx.hex(cols * rows * 3)?;
        let (ax, ay) = self.gs.ctm.apply(0.0, 0.0);
        let (bx, by) = self.gs.ctm.apply(1.0, 1.0);
        self.ops.push(Op::Image {
            x0: ax.min(bx),
            y0: ay.min(by),
            x1: ax.max(bx),
            y1: ay.max(by),
            cols,
            rows,
            rgb,
            clip: self.gs.clip,
        });
        Ok(())
    }

    fn run(&mut self) -> Result<(), PsError> {
        while let Some(t) = self.lx.next()? {
            match t {
                Tok::Num(v) => self.stack.push(Obj::Num(v)),
                Tok::Str(s) => self.stack.push(Obj::Str(s)),
                Tok::Lit(n) => self.stack.push(Obj::Lit(n)),
                Tok::Open => {
                    let body = self.proc_body()?;
                    self.stack.push(Obj::Proc(body));
                }
                Tok::Close => return self.err("unmatched }"),
                Tok::ArrOpen => self.stack.push(Obj::Mark),
                Tok::ArrClose => {
                    let Some(i) = self.stack.iter().rposition(|o| *o == Obj::Mark) else {
                        return self.err("unmatched ]");
                    };
                    let items = self.stack.split_off(i + 1);
                    self.stack.pop();
                    self.stack.push(Obj::Arr(items));
                }
                Tok::Name(n) if n == "false" || n == "true" => self.stack.push(Obj::Lit(n)),
                Tok::Name(n) => self.exec(&n)?,
            }
        }
        Ok(())
    }
}

/// Syntactic prolog check. Returns the names the prolog defines.
fn check_prolog(text: &str, first_line: usize) -> Result<Vec<String>, PsError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
        line: first_line,
    };
    let mut defined = Vec::new();
    let mut used = Vec::new();
    let mut depth = 0i32;
    let mut arrays = 0i32;
    while let Some(t) = lx.next()? {
        match t {
            Tok::Lit(n) => defined.push(n),
            Tok::Name(n) => used.push((n, lx.line)),
            Tok::Open => depth += 1,
            Tok::Close => {
                depth -= 1;
                if depth < 0 {
                    return lx.err("unmatched }");
                }
            }
            Tok::ArrOpen => arrays += 1,
            Tok::ArrClose => arrays -= 1,
            _ => {}
        }
    }
    if depth != 0 || arrays != 0 {
        return lx.err("unbalanced braces or brackets in prolog");
    }
    for (n, line) in used {
        if !PROLOG_OPS.contains(&n.as_str()) && !defined.contains(&n) {
            return Err(PsError {
                line,
                message: format!("prolog operator {n} is outside the subset"),
            });
        }
    }
    Ok(defined
        .into_iter()
        .filter(|n| n.bytes().all(is_ident_char) && n.len() > 1 && n.chars().all(|c| c.is_ascii_uppercase()))
        .collect())
}

/// Checks document structure, then executes the page.
pub fn interpret(doc: &str) -> Result<Page, PsError> {
    let fail = |line: usize, m: &str| {
        Err(PsError {
            line,
            message: m.to_string(),
        })
    };
    let lines: Vec<&str> = doc.lines().collect();
    if lines.first() != Some(&HEADER) {
        return fail(1, "missing EPSF header line");
    }
    let boxes: Vec<(usize, &str)> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| l.starts_with("%%BoundingBox:"))
        .map(|(i, l)| (i + 1, *l))
        .collect();
    if boxes.len() != 1 {
        return fail(1, "expected exactly one %%BoundingBox");
    }
    let (bline, btext) = boxes[0];
    let Ok(bb) = btext["%%BoundingBox:".len()..]
        .split_whitespace()
        .map(|v| v.parse::<i64>())
        .collect::<Result<Vec<i64>, _>>()
    else {
        return fail(bline, "bounding box must hold four integers");
    };
    if bb.len() != 4 || bb[2] <= bb[0] || bb[3] <= bb[1] {
        return fail(bline, "bounding box must be four integers with positive extent");
    }
    let Some(end_comments) = lines.iter().position(|l| *l == "%%EndComments") else {
        return fail(1, "missing %%EndComments");
    };
    if bline > end_comments + 1 {
        return fail(bline, "%%BoundingBox after %%EndComments");
    }
    if lines.iter().rev().find(|l| !l.trim().is_empty()) != Some(&"%%EOF") {
        return fail(lines.len(), "document must end with %%EOF");
    }
    let begin = lines.iter().position(|l| *l == "%%BeginProlog");
    let end = lines.iter().position(|l| *l == "%%EndProlog");
    let (procs, body_start) = match (begin, end) {
        (Some(b), Some(e)) if b < e => (check_prolog(&lines[b + 1..e].join("\n"), b + 2)?, e + 1),
        (None, None) => (Vec::new(), end_comments + 1),
        _ => return fail(1, "unbalanced prolog markers"),
    };
    let body = lines[body_start..].join("\n");
    let mut it = Interp {
        lx: Lexer {
            src: body.as_bytes(),
            pos: 0,
            line: body_start + 1,
        },
        stack: Vec::new(),
        gs: Gs {
            ctm: Ctm([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]),
            rgb: [0.0; 3],
            width: 1.0,
            dash: Vec::new(),
            clip: None,
            path: Vec::new(),
        },
        saved: Vec::new(),
        vars: HashMap::new(),
        procs,
        ops: Vec::new(),
        pages: 0,
    };
    it.run()?;
    if !it.saved.is_empty() {
        return it.err(format!("{} gsave without grestore", it.saved.len()));
    }
    if !it.stack.is_empty() {
        return it.err(format!("{} operands left on the stack", it.stack.len()));
    }
    if it.pages != 1 {
        return it.err(format!("expected one showpage, found {}", it.pages));
    }
    Ok(Page {
        bbox: [bb[0], bb[1], bb[2], bb[3]],
        ops: it.ops,
    })
}

/// Validation only.
pub fn validate(doc: &str) -> Result<(), PsError> {
    interpret(doc).map(|_| ())
}
