//! Multiplies two 4-diagrams and prints the product with its power of `x`.

use partition_algebra::{AlgebraElement, Diagram};

fn main() -> partition_algebra::Result<()> {
    let d1: Diagram = "1,2|3|4,3',4'|1',2'".parse()?;
    let d2: Diagram = "1|2|3,1'|4,2',3',4'".parse()?;

    let (concat, middle) = d1.concat(&d2)?;
    println!("d1 = {d1}");
    println!("d2 = {d2}");
    println!("d1 stacked on d2 = {concat}, {middle} middle component(s)");

    let product = AlgebraElement::from_diagram(d1).multiply(&AlgebraElement::from_diagram(d2))?;
    println!("d1 * d2 = {product}");
    println!("as JSON: {}", product.to_json());

    // a linear combination: (1 + x) * id + swap, squared
    let swap: Diagram = "1,2'|2,1'".parse()?;
    let one_plus_x = &partition_algebra::Poly::one() + &partition_algebra::Poly::x_pow(1);
    let a = AlgebraElement::identity(2)
        .scale(&one_plus_x)
        .add(&AlgebraElement::from_diagram(swap))?;
    println!("a = {a}");
    println!("a^2 = {}", a.multiply(&a)?);
    Ok(())
}
