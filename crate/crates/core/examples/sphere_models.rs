//! Symmetric spheres whose antipodal quotients are family members.
//!
//! cargo run --example sphere_models -- 2,3

use mycielski::graph::double_cover;
use mycielski::graph::is_isomorphic;
use mycielski::lift::sphere_model;

fn main() -> mycielski::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "2,3".into()).parse()?;
    let model = sphere_model(&spec)?;
    let k = &model.sphere.complex;
    println!("sphere model of build_family({spec}): S^{}", model.sphere.dim());
    println!("f-vector {:?}, Euler characteristic {}", k.f_vector(), k.euler_characteristic());
    println!("{}", model.verify()?);
    let q = model.sphere.quotient()?;
    println!(
        "quotient has {} vertices; double cover matches the bichromatic skeleton: {}",
        q.graph.order(),
        is_isomorphic(&double_cover(&q.graph), &q.cover)?.is_some()
    );
    Ok(())
}
