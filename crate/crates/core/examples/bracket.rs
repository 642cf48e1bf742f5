//! Stated skein values of small tangles in a biangle.

use qtrace::biangle::{parse_signs, signs_to_string, trace_b, trace_table, words, StatedTangle, TangleWord};

fn show(label: &str, w: &TangleWord, s0: &str, s1: &str) -> qtrace::Result<()> {
    let t = StatedTangle::new(w.clone(), parse_signs(s0)?, parse_signs(s1)?)?;
    println!("{label:<22} in {s0:<3} out {s1:<3} -> {}", trace_b(&t)?);
    Ok(())
}

fn main() -> qtrace::Result<()> {
    show("trivial loop", &words::small_loop(), "", "")?;
    show("over kink", &words::kink(true), "+", "+")?;
    show("under kink", &words::kink(false), "-", "-")?;
    show("returning arc, wall 0", &TangleWord::parse("cap 1", 2)?, "+-", "")?;
    show("returning arc, wall 0", &TangleWord::parse("cap 1", 2)?, "-+", "")?;

    println!("\nright half-twist:");
    for ((s0, s1), v) in trace_table(&words::right_half_twist())? {
        if !v.is_zero() {
            println!("  {} -> {}: {v}", signs_to_string(&s0), signs_to_string(&s1));
        }
    }
    Ok(())
}
