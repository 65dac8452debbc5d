//! Binary Gray images of codes over both rings, with linearity and
//! quasi-cyclic closure checks.

use dnacyclic::cyclic::{CodeOverR, Generator};
use dnacyclic::reproduce;
use dnacyclic::skew::{self, SkewCode, SkewGenerators};

fn main() -> dnacyclic::Result<()> {
    for gen in ["u^4*(x+1)*(x^3+x+1)", "u^2*(x^3+x^2+1)", "u^3*(x^3+x+1); u^5"] {
        let code = CodeOverR::from_generators(7, Generator::parse_list(gen)?)?;
        let words = code.enumerate(1 << 20)?;
        let g = reproduce::r_gray_check(&words);
        println!("<{gen}>: {} words, image length 42, linear {}, closed under 6-bit rotation {}", g.words, g.linear, g.quasi_cyclic);
    }
    for gen in ["x^2+v*x+1", "x+1", "x^2+1"] {
        let code = SkewCode::build(4, SkewGenerators::Monic(gen.parse()?))?;
        let image = skew::skew_gray_image(&code.enumerate(1 << 20)?);
        let two = reproduce::gray_check(&image, 2);
        let four = reproduce::gray_check(&image, 4);
        println!(
            "skew <{gen}>, n=4: {} words, linear {}, closed under 2-bit rotation {}, 4-bit rotation {}",
            two.words, two.linear, two.quasi_cyclic, four.quasi_cyclic
        );
    }
    Ok(())
}
