//! Line-oriented circuit file format and its executor.
//!
//! A program starts with `QUBITS n`, followed by one instruction per line:
//! single-qubit gates `H q`, `S q`, `SDG q`, `X q`, `Y q`, `Z q`,
//! two-qubit gates `CZ a b`, `CX a b`, `CY a b` (control first), and
//! Pauli measurements `M <string>` with an n-letter string over I/X/Y/Z.
//! Qubits are 1-indexed; `#` starts a comment.

use egsim::gates;
use egsim::{ExtendedGraphState, PauliLetter, PauliOperator, SinglePauli};
use egsim::algebra::LocalClifford;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instruction {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cz(usize, usize),
    Cx(usize, usize),
    Cy(usize, usize),
    Measure(Vec<PauliLetter>),
}

/// A parsed program; qubit indices are stored 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitProgram {
    pub n: usize,
    pub instructions: Vec<Instruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct CircuitError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, CircuitError> {
    Err(CircuitError { line, message: message.into() })
}

pub fn parse_circuit(text: &str) -> Result<CircuitProgram, CircuitError> {
    let mut n: Option<usize> = None;
    let mut instructions = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let head = tokens.next().unwrap();
        let Some(n) = n else {
            if head != "QUBITS" {
                return fail(line, format!("expected `QUBITS n`, found `{head}`"));
            }
            let count = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .filter(|&c| c >= 1);
            let Some(count) = count else {
                return fail(line, "QUBITS needs a positive integer");
            };
            if tokens.next().is_some() {
                return fail(line, "trailing tokens after QUBITS");
            }
            n = Some(count);
            continue;
        };
        let qubit = |tokens: &mut dyn Iterator<Item = &str>| -> Result<usize, CircuitError> {
            let Some(t) = tokens.next() else {
                return fail(line, format!("`{head}` is missing a qubit operand"));
            };
            match t.parse::<usize>() {
                Ok(q) if (1..=n).contains(&q) => Ok(q - 1),
                _ => fail(line, format!("qubit `{t}` is not in 1..={n}")),
            }
        };
        let instr = match head {
            "H" => Instruction::H(qubit(&mut tokens)?),
            "S" => Instruction::S(qubit(&mut tokens)?),
            "SDG" => Instruction::Sdg(qubit(&mut tokens)?),
            "X" => Instruction::X(qubit(&mut tokens)?),
            "Y" => Instruction::Y(qubit(&mut tokens)?),
            "Z" => Instruction::Z(qubit(&mut tokens)?),
            "CZ" | "CX" | "CY" => {
                let a = qubit(&mut tokens)?;
                let b = qubit(&mut tokens)?;
                if a == b {
                    return fail(line, format!("`{head}` needs two distinct qubits"));
                }
                match head {
                    "CZ" => Instruction::Cz(a, b),
                    "CX" => Instruction::Cx(a, b),
                    _ => Instruction::Cy(a, b),
                }
            }
            "M" => {
                let Some(t) = tokens.next() else {
                    return fail(line, "`M` is missing its Pauli string");
                };
                if t.len() != n {
                    return fail(line, format!("Pauli string `{t}` is not {n} letters"));
                }
                let mut letters = Vec::with_capacity(n);
                for ch in t.chars() {
                    letters.push(match ch {
                        'I' => PauliLetter::I,
                        'X' => PauliLetter::X,
                        'Y' => PauliLetter::Y,
                        'Z' => PauliLetter::Z,
                        _ => return fail(line, format!("bad Pauli letter `{ch}`")),
                    });
                }
                if letters.iter().all(|&l| l == PauliLetter::I) {
                    return fail(line, "measurement needs a non-identity Pauli");
                }
                Instruction::Measure(letters)
            }
            _ => return fail(line, format!("unknown mnemonic `{head}`")),
        };
        if tokens.next().is_some() {
            return fail(line, "trailing tokens");
        }
        instructions.push(instr);
    }
    match n {
        Some(n) => Ok(CircuitProgram { n, instructions }),
        None => fail(last_line.max(1), "missing `QUBITS n` header"),
    }
}

/// One executed measurement: the letter string, p(+1), and the branch taken.
pub struct MeasurementRecord {
    pub pauli: String,
    pub probability: f64,
    pub outcome: i8,
}

pub struct ExecOutcome {
    pub state: ExtendedGraphState,
    pub measurements: Vec<MeasurementRecord>,
}

/// Run a program from |0..0>.  Measurements take the +1 branch when it has
/// nonzero probability (or always sample it when `rng` is given).
pub fn execute(
    program: &CircuitProgram,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<ExecOutcome, String> {
    let mut s = ExtendedGraphState::basis_state(&vec![false; program.n])
        .map_err(|e| e.to_string())?;
    let mut measurements = Vec::new();
    for instr in &program.instructions {
        match *instr {
            Instruction::H(q) => s.apply_local(q, &LocalClifford::H),
            Instruction::S(q) => s.apply_local(q, &LocalClifford::S),
            Instruction::Sdg(q) => s.apply_local(q, &LocalClifford::SDG),
            Instruction::X(q) | Instruction::Y(q) | Instruction::Z(q) => {
                let letter = match instr {
                    Instruction::X(_) => PauliLetter::X,
                    Instruction::Y(_) => PauliLetter::Y,
                    _ => PauliLetter::Z,
                };
                s.apply_local(q, &LocalClifford::from_pauli(SinglePauli::new(letter, 0)));
            }
            Instruction::Cz(a, b) => gates::apply_cz(&mut s, a, b).map_err(|e| e.to_string())?,
            Instruction::Cx(a, b) => gates::apply_cx(&mut s, a, b).map_err(|e| e.to_string())?,
            Instruction::Cy(a, b) => gates::apply_cy(&mut s, a, b).map_err(|e| e.to_string())?,
            Instruction::Measure(ref letters) => {
                let mut p = PauliOperator::identity(program.n);
                for (q, &l) in letters.iter().enumerate() {
                    if l != PauliLetter::I {
                        p = p.mul(&PauliOperator::embed(program.n, q, SinglePauli::new(l, 0)));
                    }
                }
                let (prob, plus_branch) = gates::measure_pauli(&s, &p).map_err(|e| e.to_string())?;
                let take_plus = match rng.as_deref_mut() {
                    Some(rng) => prob > 0.0 && (prob >= 1.0 || rng.gen_bool(prob)),
                    None => prob > 0.0,
                };
                if take_plus {
                    s = plus_branch;
                } else {
                    let mut neg = p.clone();
                    neg.mul_phase(2);
                    let (_, minus_branch) =
                        gates::measure_pauli(&s, &neg).map_err(|e| e.to_string())?;
                    s = minus_branch;
                }
                measurements.push(MeasurementRecord {
                    pauli: letters
                        .iter()
                        .map(|l| match l {
                            PauliLetter::I => 'I',
                            PauliLetter::X => 'X',
                            PauliLetter::Y => 'Y',
                            PauliLetter::Z => 'Z',
                        })
                        .collect(),
                    probability: prob,
                    outcome: if take_plus { 1 } else { -1 },
                });
            }
        }
    }
    Ok(ExecOutcome { state: s, measurements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_programs() {
        let p = parse_circuit("QUBITS 2\nH 1\nCZ 1 2").unwrap();
        assert_eq!(p.n, 2);
        assert_eq!(p.instructions, vec![Instruction::H(0), Instruction::Cz(0, 1)]);
        let m = parse_circuit("QUBITS 1\nM Z").unwrap();
        assert_eq!(m.instructions, vec![Instruction::Measure(vec![PauliLetter::Z])]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let p = parse_circuit("# preamble\n\nQUBITS 2\nH 1 # dagger-free\n").unwrap();
        assert_eq!(p.instructions.len(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_circuit("QUBITS 2\nCZ 1 1").unwrap_err().line, 2);
        assert_eq!(parse_circuit("QUBITS 2\nQ 1").unwrap_err().line, 2);
        assert_eq!(parse_circuit("QUBITS 2\nH 3").unwrap_err().line, 2);
        assert_eq!(parse_circuit("QUBITS 1\nM W").unwrap_err().line, 2);
        assert_eq!(parse_circuit("QUBITS 2\nM Z").unwrap_err().line, 2);
        assert_eq!(parse_circuit("H 1").unwrap_err().line, 1);
        assert_eq!(parse_circuit("").unwrap_err().line, 1);
    }

    #[test]
    fn bell_circuit_measures_deterministically() {
        let p = parse_circuit("QUBITS 2\nH 1\nCX 1 2\nM ZZ\nM ZI").unwrap();
        let out = execute(&p, None).unwrap();
        assert_eq!(out.measurements[0].probability, 1.0);
        assert_eq!(out.measurements[0].outcome, 1);
        assert_eq!(out.measurements[1].probability, 0.5);
        assert_eq!(out.measurements[1].outcome, 1);
        // After measuring Z1 = +1 on a Bell pair the state is |00>.
        let zero = ExtendedGraphState::basis_state(&[false, false]).unwrap();
        assert!(out.state.state_equal(&zero, true));
    }

    #[test]
    fn impossible_plus_branch_takes_minus() {
        let p = parse_circuit("QUBITS 1\nX 1\nM Z").unwrap();
        let out = execute(&p, None).unwrap();
        assert_eq!(out.measurements[0].probability, 0.0);
        assert_eq!(out.measurements[0].outcome, -1);
        let one = ExtendedGraphState::basis_state(&[true]).unwrap();
        assert!(out.state.state_equal(&one, true));
    }
}
