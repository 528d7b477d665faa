/* react@19.2.8 + react-dom@19.2.8/client, production ESM bundle, MIT (Meta Platforms). Generated file, regenerate with: npm run vendor */
var Om=Object.create;var Hi=Object.defineProperty;var _m=Object.getOwnPropertyDescriptor;var Mm=Object.getOwnPropertyNames;var Dm=Object.getPrototypeOf,Um=Object.prototype.hasOwnProperty;var At=(l,t)=>()=>{try{return t||l((t={exports:{}}).exports,t),t.exports}catch(u){throw t=0,u}};var Hm=(l,t,u,a)=>{if(t&&typeof t=="object"||typeof t=="function")for(let n of Mm(t))!Um.call(l,n)&&n!==u&&Hi(l,n,{get:()=>t[n],enumerable:!(a=_m(t,n))||a.enumerable});return l};var Ni=(l,t,u)=>(u=l!=null?Om(Dm(l)):{},Hm(t||!l||!l.__esModule?Hi(u,"default",{value:l,enumerable:!0}):u,l));var ji=At(_=>{"use strict";var Ke=Symbol.for("react.transitional.element"),Nm=Symbol.for("react.portal"),pm=Symbol.for("react.fragment"),qm=Symbol.for("react.strict_mode"),Rm=Symbol.for("react.profiler"),Bm=Symbol.for("react.consumer"),Ym=Symbol.for("react.context"),Cm=Symbol.for("react.forward_ref"),Gm=Symbol.for("react.suspense"),Xm=Symbol.for("react.memo"),Yi=Symbol.for("react.lazy"),Qm=Symbol.for("react.activity"),pi=Symbol.iterator;function Zm(l){return l===null||typeof l!="object"?null:(l=pi&&l[pi]||l["@@iterator"],typeof l=="function"?l:null)}var Ci={isMounted:function(){return!1},enqueueForceUpdate:function(){},enqueueReplaceState:function(){},enqueueSetState:function(){}},Gi=Object.assign,Xi={};function bu(l,t,u){this.props=l,this.context=t,this.refs=Xi,this.updater=u||Ci}bu.prototype.isReactComponent={};bu.prototype.setState=function(l,t){if(typeof l!="object"&&typeof l!="function"&&l!=null)throw Error("takes an object of state variables to update or a function which returns an object of state variables.");this.updater.enqueueSetState(this,l,t,"setState")};bu.prototype.forceUpdate=function(l){this.updater.enqueueForceUpdate(this,l,"forceUpdate")};function Qi(){}Qi.prototype=bu.prototype;function Je(l,t,u){this.props=l,this.context=t,this.refs=Xi,this.updater=u||Ci}var re=Je.prototype=new Qi;re.constructor=Je;Gi(re,bu.prototype);re.isPureReactComponent=!0;var qi=Array.isArray;function Le(){}var L={H:null,A:null,T:null,S:null},Zi=Object.prototype.hasOwnProperty;function we(l,t,u){var a=u.ref;return{$$typeof:Ke,type:l,key:t,ref:a!==void 0?a:null,props:u}}function jm(l,t){return we(l.type,t,l.props)}function We(l){return typeof l=="object"&&l!==null&&l.$$typeof===Ke}function Vm(l){var t={"=":"=0",":":"=2"};return"$"+l.replace(/[=:]/g,function(u){return t[u]})}var Ri=/\/+/g;function xe(l,t){return typeof l=="object"&&l!==null&&l.key!=null?Vm(""+l.key):t.toString(36)}function xm(l){switch(l.status){case"fulfilled":return l.value;case"rejected":throw l.reason;default:switch(typeof l.status=="string"?l.then(Le,Le):(l.status="pending",l.then(function(t){l.status==="pending"&&(l.status="fulfilled",l.value=t)},function(t){l.status==="pending"&&(l.status="rejected",l.reason=t)})),l.status){case"fulfilled":return l.value;case"rejected":throw l.reason}}throw l}function su(l,t,u,a,n){var e=typeof l;(e==="undefined"||e==="boolean")&&(l=null);var f=!1;if(l===null)f=!0;else switch(e){case"bigint":case"string":case"number":f=!0;break;case"object":switch(l.$$typeof){case Ke:case Nm:f=!0;break;case Yi:return f=l._init,su(f(l._payload),t,u,a,n)}}if(f)return n=n(l),f=a===""?"."+xe(l,0):a,qi(n)?(u="",f!=null&&(u=f.replace(Ri,"$&/")+"/"),su(n,t,u,"",function(m){return m})):n!=null&&(We(n)&&(n=jm(n,u+(n.key==null||l&&l.key===n.key?"":(""+n.key).replace(Ri,"$&/")+"/")+f)),t.push(n)),1;f=0;var c=a===""?".":a+":";if(qi(l))for(var i=0;i<l.length;i++)a=l[i],e=c+xe(a,i),f+=su(a,t,u,e,n);else if(i=Zm(l),typeof i=="function")for(l=i.call(l),i=0;!(a=l.next()).done;)a=a.value,e=c+xe(a,i++),f+=su(a,t,u,e,n);else if(e==="object"){if(typeof l.then=="function")return su(xm(l),t,u,a,n);throw t=String(l),Error("Objects are not valid as a React child (found: "+(t==="[object Object]"?"object with keys {"+Object.keys(l).join(", ")+"}":t)+"). If you meant to render a collection of children, use an array instead.")}return f}function mn(l,t,u){if(l==null)return l;var a=[],n=0;return su(l,a,"","",function(e){return t.call(u,e,n++)}),a}function Lm(l){if(l._status===-1){var t=l._result;t=t(),t.then(function(u){(l._status===0||l._status===-1)&&(l._status=1,l._result=u)},function(u){(l._status===0||l._status===-1)&&(l._status=2,l._result=u)}),l._status===-1&&(l._status=0,l._result=t)}if(l._status===1)return l._result.default;throw l._result}var Bi=typeof reportError=="function"?reportError:function(l){if(typeof window=="object"&&typeof window.ErrorEvent=="function"){var t=new window.ErrorEvent("error",{bubbles:!0,cancelable:!0,message:typeof l=="object"&&l!==null&&typeof l.message=="string"?String(l.message):String(l),error:l});if(!window.dispatchEvent(t))return}else if(typeof process=="object"&&typeof process.emit=="function"){process.emit("uncaughtException",l);return}console.error(l)},Km={map:mn,forEach:function(l,t,u){mn(l,function(){t.apply(this,arguments)},u)},count:function(l){var t=0;return mn(l,function(){t++}),t},toArray:function(l){return mn(l,function(t){return t})||[]},only:function(l){if(!We(l))throw Error("React.Children.only expected to receive a single React element child.");return l}};_.Activity=Qm;_.Children=Km;_.Component=bu;_.Fragment=pm;_.Profiler=Rm;_.PureComponent=Je;_.StrictMode=qm;_.Suspense=Gm;_.__CLIENT_INTERNALS_DO_NOT_USE_OR_WARN_USERS_THEY_CANNOT_UPGRADE=L;_.__COMPILER_RUNTIME={__proto__:null,c:function(l){return L.H.useMemoCache(l)}};_.cache=function(l){return function(){return l.apply(null,arguments)}};_.cacheSignal=function(){return null};_.cloneElement=function(l,t,u){if(l==null)throw Error("The argument must be a React element, but you passed "+l+".");var a=Gi({},l.props),n=l.key;if(t!=null)for(e in t.key!==void 0&&(n=""+t.key),t)!Zi.call(t,e)||e==="key"||e==="__self"||e==="__source"||e==="ref"&&t.ref===void 0||(a[e]=t[e]);var e=arguments.length-2;if(e===1)a.children=u;else if(1<e){for(var f=Array(e),c=0;c<e;c++)f[c]=arguments[c+2];a.children=f}return we(l.type,n,a)};_.createContext=function(l){return l={$$typeof:Ym,_currentValue:l,_currentValue2:l,_threadCount:0,Provider:null,Consumer:null},l.Provider=l,l.Consumer={$$typeof:Bm,_context:l},l};_.createElement=function(l,t,u){var a,n={},e=null;if(t!=null)for(a in t.key!==void 0&&(e=""+t.key),t)Zi.call(t,a)&&a!=="key"&&a!=="__self"&&a!=="__source"&&(n[a]=t[a]);var f=arguments.length-2;if(f===1)n.children=u;else if(1<f){for(var c=Array(f),i=0;i<f;i++)c[i]=arguments[i+2];n.children=c}if(l&&l.defaultProps)for(a in f=l.defaultProps,f)n[a]===void 0&&(n[a]=f[a]);return we(l,e,n)};_.createRef=function(){return{current:null}};_.forwardRef=function(l){return{$$typeof:Cm,render:l}};_.isValidElement=We;_.lazy=function(l){return{$$typeof:Yi,_payload:{_status:-1,_result:l},_init:Lm}};_.memo=function(l,t){return{$$typeof:Xm,type:l,compare:t===void 0?null:t}};_.startTransition=function(l){var t=L.T,u={};L.T=u;try{var a=l(),n=L.S;n!==null&&n(u,a),typeof a=="object"&&a!==null&&typeof a.then=="function"&&a.then(Le,Bi)}catch(e){Bi(e)}finally{t!==null&&u.types!==null&&(t.types=u.types),L.T=t}};_.unstable_useCacheRefresh=function(){return L.H.useCacheRefresh()};_.use=function(l){return L.H.use(l)};_.useActionState=function(l,t,u){return L.H.useActionState(l,t,u)};_.useCallback=function(l,t){return L.H.useCallback(l,t)};_.useContext=function(l){return L.H.useContext(l)};_.useDebugValue=function(){};_.useDeferredValue=function(l,t){return L.H.useDeferredValue(l,t)};_.useEffect=function(l,t){return L.H.useEffect(l,t)};_.useEffectEvent=function(l){return L.H.useEffectEvent(l)};_.useId=function(){return L.H.useId()};_.useImperativeHandle=function(l,t,u){return L.H.useImperativeHandle(l,t,u)};_.useInsertionEffect=function(l,t){return L.H.useInsertionEffect(l,t)};_.useLayoutEffect=function(l,t){return L.H.useLayoutEffect(l,t)};_.useMemo=function(l,t){return L.H.useMemo(l,t)};_.useOptimistic=function(l,t){return L.H.useOptimistic(l,t)};_.useReducer=function(l,t,u){return L.H.useReducer(l,t,u)};_.useRef=function(l){return L.H.useRef(l)};_.useState=function(l){return L.H.useState(l)};_.useSyncExternalStore=function(l,t,u){return L.H.useSyncExternalStore(l,t,u)};_.useTransition=function(){return L.H.useTransition()};_.version="19.2.8"});var dn=At((A2,Vi)=>{"use strict";Vi.exports=ji()});var ki=At(w=>{"use strict";function Ie(l,t){var u=l.length;l.push(t);l:for(;0<u;){var a=u-1>>>1,n=l[a];if(0<hn(n,t))l[a]=t,l[u]=n,u=a;else break l}}function Wl(l){return l.length===0?null:l[0]}function gn(l){if(l.length===0)return null;var t=l[0],u=l.pop();if(u!==t){l[0]=u;l:for(var a=0,n=l.length,e=n>>>1;a<e;){var f=2*(a+1)-1,c=l[f],i=f+1,m=l[i];if(0>hn(c,u))i<n&&0>hn(m,c)?(l[a]=m,l[i]=u,a=i):(l[a]=c,l[f]=u,a=f);else if(i<n&&0>hn(m,u))l[a]=m,l[i]=u,a=i;else break l}}return t}function hn(l,t){var u=l.sortIndex-t.sortIndex;return u!==0?u:l.id-t.id}w.unstable_now=void 0;typeof performance=="object"&&typeof performance.now=="function"?(xi=performance,w.unstable_now=function(){return xi.now()}):($e=Date,Li=$e.now(),w.unstable_now=function(){return $e.now()-Li});var xi,$e,Li,tt=[],Ot=[],Jm=1,Yl=null,hl=3,Pe=!1,ya=!1,va=!1,lf=!1,ri=typeof setTimeout=="function"?setTimeout:null,wi=typeof clearTimeout=="function"?clearTimeout:null,Ki=typeof setImmediate<"u"?setImmediate:null;function Sn(l){for(var t=Wl(Ot);t!==null;){if(t.callback===null)gn(Ot);else if(t.startTime<=l)gn(Ot),t.sortIndex=t.expirationTime,Ie(tt,t);else break;t=Wl(Ot)}}function tf(l){if(va=!1,Sn(l),!ya)if(Wl(tt)!==null)ya=!0,Eu||(Eu=!0,zu());else{var t=Wl(Ot);t!==null&&uf(tf,t.startTime-l)}}var Eu=!1,ma=-1,Wi=5,$i=-1;function Fi(){return lf?!0:!(w.unstable_now()-$i<Wi)}function Fe(){if(lf=!1,Eu){var l=w.unstable_now();$i=l;var t=!0;try{l:{ya=!1,va&&(va=!1,wi(ma),ma=-1),Pe=!0;var u=hl;try{t:{for(Sn(l),Yl=Wl(tt);Yl!==null&&!(Yl.expirationTime>l&&Fi());){var a=Yl.callback;if(typeof a=="function"){Yl.callback=null,hl=Yl.priorityLevel;var n=a(Yl.expirationTime<=l);if(l=w.unstable_now(),typeof n=="function"){Yl.callback=n,Sn(l),t=!0;break t}Yl===Wl(tt)&&gn(tt),Sn(l)}else gn(tt);Yl=Wl(tt)}if(Yl!==null)t=!0;else{var e=Wl(Ot);e!==null&&uf(tf,e.startTime-l),t=!1}}break l}finally{Yl=null,hl=u,Pe=!1}t=void 0}}finally{t?zu():Eu=!1}}}var zu;typeof Ki=="function"?zu=function(){Ki(Fe)}:typeof MessageChannel<"u"?(ke=new MessageChannel,Ji=ke.port2,ke.port1.onmessage=Fe,zu=function(){Ji.postMessage(null)}):zu=function(){ri(Fe,0)};var ke,Ji;function uf(l,t){ma=ri(function(){l(w.unstable_now())},t)}w.unstable_IdlePriority=5;w.unstable_ImmediatePriority=1;w.unstable_LowPriority=4;w.unstable_NormalPriority=3;w.unstable_Profiling=null;w.unstable_UserBlockingPriority=2;w.unstable_cancelCallback=function(l){l.callback=null};w.unstable_forceFrameRate=function(l){0>l||125<l?console.error("forceFrameRate takes a positive int between 0 and 125, forcing frame rates higher than 125 fps is not supported"):Wi=0<l?Math.floor(1e3/l):5};w.unstable_getCurrentPriorityLevel=function(){return hl};w.unstable_next=function(l){switch(hl){case 1:case 2:case 3:var t=3;break;default:t=hl}var u=hl;hl=t;try{return l()}finally{hl=u}};w.unstable_requestPaint=function(){lf=!0};w.unstable_runWithPriority=function(l,t){switch(l){case 1:case 2:case 3:case 4:case 5:break;default:l=3}var u=hl;hl=l;try{return t()}finally{hl=u}};w.unstable_scheduleCallback=function(l,t,u){var a=w.unstable_now();switch(typeof u=="object"&&u!==null?(u=u.delay,u=typeof u=="number"&&0<u?a+u:a):u=a,l){case 1:var n=-1;break;case 2:n=250;break;case 5:n=1073741823;break;case 4:n=1e4;break;default:n=5e3}return n=u+n,l={id:Jm++,callback:t,priorityLevel:l,startTime:u,expirationTime:n,sortIndex:-1},u>a?(l.sortIndex=u,Ie(Ot,l),Wl(tt)===null&&l===Wl(Ot)&&(va?(wi(ma),ma=-1):va=!0,uf(tf,u-a))):(l.sortIndex=n,Ie(tt,l),ya||Pe||(ya=!0,Eu||(Eu=!0,zu()))),l};w.unstable_shouldYield=Fi;w.unstable_wrapCallback=function(l){var t=hl;return function(){var u=hl;hl=t;try{return l.apply(this,arguments)}finally{hl=u}}}});var Pi=At((_2,Ii)=>{"use strict";Ii.exports=ki()});var t0=At(gl=>{"use strict";var rm=dn();function l0(l){var t="https://react.dev/errors/"+l;if(1<arguments.length){t+="?args[]="+encodeURIComponent(arguments[1]);for(var u=2;u<arguments.length;u++)t+="&args[]="+encodeURIComponent(arguments[u])}return"Minified React error #"+l+"; visit "+t+" for the full message or use the non-minified dev environment for full errors and additional helpful warnings."}function _t(){}var Sl={d:{f:_t,r:function(){throw Error(l0(522))},D:_t,C:_t,L:_t,m:_t,X:_t,S:_t,M:_t},p:0,findDOMNode:null},wm=Symbol.for("react.portal");function Wm(l,t,u){var a=3<arguments.length&&arguments[3]!==void 0?arguments[3]:null;return{$$typeof:wm,key:a==null?null:""+a,children:l,containerInfo:t,implementation:u}}var da=rm.__CLIENT_INTERNALS_DO_NOT_USE_OR_WARN_USERS_THEY_CANNOT_UPGRADE;function on(l,t){if(l==="font")return"";if(typeof t=="string")return t==="use-credentials"?t:""}gl.__DOM_INTERNALS_DO_NOT_USE_OR_WARN_USERS_THEY_CANNOT_UPGRADE=Sl;gl.createPortal=function(l,t){var u=2<arguments.length&&arguments[2]!==void 0?arguments[2]:null;if(!t||t.nodeType!==1&&t.nodeType!==9&&t.nodeType!==11)throw Error(l0(299));return Wm(l,t,null,u)};gl.flushSync=function(l){var t=da.T,u=Sl.p;try{if(da.T=null,Sl.p=2,l)return l()}finally{da.T=t,Sl.p=u,Sl.d.f()}};gl.preconnect=function(l,t){typeof l=="string"&&(t?(t=t.crossOrigin,t=typeof t=="string"?t==="use-credentials"?t:"":void 0):t=null,Sl.d.C(l,t))};gl.prefetchDNS=function(l){typeof l=="string"&&Sl.d.D(l)};gl.preinit=function(l,t){if(typeof l=="string"&&t&&typeof t.as=="string"){var u=t.as,a=on(u,t.crossOrigin),n=typeof t.integrity=="string"?t.integrity:void 0,e=typeof t.fetchPriority=="string"?t.fetchPriority:void 0;u==="style"?Sl.d.S(l,typeof t.precedence=="string"?t.precedence:void 0,{crossOrigin:a,integrity:n,fetchPriority:e}):u==="script"&&Sl.d.X(l,{crossOrigin:a,integrity:n,fetchPriority:e,nonce:typeof t.nonce=="string"?t.nonce:void 0})}};gl.preinitModule=function(l,t){if(typeof l=="string")if(typeof t=="object"&&t!==null){if(t.as==null||t.as==="script"){var u=on(t.as,t.crossOrigin);Sl.d.M(l,{crossOrigin:u,integrity:typeof t.integrity=="string"?t.integrity:void 0,nonce:typeof t.nonce=="string"?t.nonce:void 0})}}else t==null&&Sl.d.M(l)};gl.preload=function(l,t){if(typeof l=="string"&&typeof t=="object"&&t!==null&&typeof t.as=="string"){var u=t.as,a=on(u,t.crossOrigin);Sl.d.L(l,u,{crossOrigin:a,integrity:typeof t.integrity=="string"?t.integrity:void 0,nonce:typeof t.nonce=="string"?t.nonce:void 0,type:typeof t.type=="string"?t.type:void 0,fetchPriority:typeof t.fetchPriority=="string"?t.fetchPriority:void 0,referrerPolicy:typeof t.referrerPolicy=="string"?t.referrerPolicy:void 0,imageSrcSet:typeof t.imageSrcSet=="string"?t.imageSrcSet:void 0,imageSizes:typeof t.imageSizes=="string"?t.imageSizes:void 0,media:typeof t.media=="string"?t.media:void 0})}};gl.preloadModule=function(l,t){if(typeof l=="string")if(t){var u=on(t.as,t.crossOrigin);Sl.d.m(l,{as:typeof t.as=="string"&&t.as!=="script"?t.as:void 0,crossOrigin:u,integrity:typeof t.integrity=="string"?t.integrity:void 0})}else Sl.d.m(l)};gl.requestFormReset=function(l){Sl.d.r(l)};gl.unstable_batchedUpdates=function(l,t){return l(t)};gl.useFormState=function(l,t,u){return da.H.useFormState(l,t,u)};gl.useFormStatus=function(){return da.H.useHostTransitionStatus()};gl.version="19.2.8"});var n0=At((D2,a0)=>{"use strict";function u0(){if(!(typeof __REACT_DEVTOOLS_GLOBAL_HOOK__>"u"||typeof __REACT_DEVTOOLS_GLOBAL_HOOK__.checkDCE!="function"))try{__REACT_DEVTOOLS_GLOBAL_HOOK__.checkDCE(u0)}catch(l){console.error(l)}}u0(),a0.exports=t0()});var om=At(Ve=>{"use strict";var nl=Pi(),p1=dn(),$m=n0();function b(l){var t="https://react.dev/errors/"+l;if(1<arguments.length){t+="?args[]="+encodeURIComponent(arguments[1]);for(var u=2;u<arguments.length;u++)t+="&args[]="+encodeURIComponent(arguments[u])}return"Minified React error #"+l+"; visit "+t+" for the full message or use the non-minified dev environment for full errors and additional helpful warnings."}function q1(l){return!(!l||l.nodeType!==1&&l.nodeType!==9&&l.nodeType!==11)}function Ia(l){var t=l,u=l;if(l.alternate)for(;t.return;)t=t.return;else{l=t;do t=l,(t.flags&4098)!==0&&(u=t.return),l=t.return;while(l)}return t.tag===3?u:null}function R1(l){if(l.tag===13){var t=l.memoizedState;if(t===null&&(l=l.alternate,l!==null&&(t=l.memoizedState)),t!==null)return t.dehydrated}return null}function B1(l){if(l.tag===31){var t=l.memoizedState;if(t===null&&(l=l.alternate,l!==null&&(t=l.memoizedState)),t!==null)return t.dehydrated}return null}function e0(l){if(Ia(l)!==l)throw Error(b(188))}function Fm(l){var t=l.alternate;if(!t){if(t=Ia(l),t===null)throw Error(b(188));return t!==l?null:l}for(var u=l,a=t;;){var n=u.return;if(n===null)break;var e=n.alternate;if(e===null){if(a=n.return,a!==null){u=a;continue}break}if(n.child===e.child){for(e=n.child;e;){if(e===u)return e0(n),l;if(e===a)return e0(n),t;e=e.sibling}throw Error(b(188))}if(u.return!==a.return)u=n,a=e;else{for(var f=!1,c=n.child;c;){if(c===u){f=!0,u=n,a=e;break}if(c===a){f=!0,a=n,u=e;break}c=c.sibling}if(!f){for(c=e.child;c;){if(c===u){f=!0,u=e,a=n;break}if(c===a){f=!0,a=e,u=n;break}c=c.sibling}if(!f)throw Error(b(189))}}if(u.alternate!==a)throw Error(b(190))}if(u.tag!==3)throw Error(b(188));return u.stateNode.current===u?l:t}function Y1(l){var t=l.tag;if(t===5||t===26||t===27||t===6)return l;for(l=l.child;l!==null;){if(t=Y1(l),t!==null)return t;l=l.sibling}return null}var r=Object.assign,km=Symbol.for("react.element"),sn=Symbol.for("react.transitional.element"),Ea=Symbol.for("react.portal"),Du=Symbol.for("react.fragment"),C1=Symbol.for("react.strict_mode"),Xf=Symbol.for("react.profiler"),G1=Symbol.for("react.consumer"),yt=Symbol.for("react.context"),Rc=Symbol.for("react.forward_ref"),Qf=Symbol.for("react.suspense"),Zf=Symbol.for("react.suspense_list"),Bc=Symbol.for("react.memo"),Mt=Symbol.for("react.lazy"),jf=Symbol.for("react.activity"),Im=Symbol.for("react.memo_cache_sentinel"),f0=Symbol.iterator;function ha(l){return l===null||typeof l!="object"?null:(l=f0&&l[f0]||l["@@iterator"],typeof l=="function"?l:null)}var Pm=Symbol.for("react.client.reference");function Vf(l){if(l==null)return null;if(typeof l=="function")return l.$$typeof===Pm?null:l.displayName||l.name||null;if(typeof l=="string")return l;switch(l){case Du:return"Fragment";case Xf:return"Profiler";case C1:return"StrictMode";case Qf:return"Suspense";case Zf:return"SuspenseList";case jf:return"Activity"}if(typeof l=="object")switch(l.$$typeof){case Ea:return"Portal";case yt:return l.displayName||"Context";case G1:return(l._context.displayName||"Context")+".Consumer";case Rc:var t=l.render;return l=l.displayName,l||(l=t.displayName||t.name||"",l=l!==""?"ForwardRef("+l+")":"ForwardRef"),l;case Bc:return t=l.displayName||null,t!==null?t:Vf(l.type)||"Memo";case Mt:t=l._payload,l=l._init;try{return Vf(l(t))}catch{}}return null}var Ta=Array.isArray,O=p1.__CLIENT_INTERNALS_DO_NOT_USE_OR_WARN_USERS_THEY_CANNOT_UPGRADE,C=$m.__DOM_INTERNALS_DO_NOT_USE_OR_WARN_USERS_THEY_CANNOT_UPGRADE,uu={pending:!1,data:null,method:null,action:null},xf=[],Uu=-1;function Pl(l){return{current:l}}function cl(l){0>Uu||(l.current=xf[Uu],xf[Uu]=null,Uu--)}function x(l,t){Uu++,xf[Uu]=l.current,l.current=t}var Il=Pl(null),Qa=Pl(null),Gt=Pl(null),Fn=Pl(null);function kn(l,t){switch(x(Gt,t),x(Qa,l),x(Il,null),t.nodeType){case 9:case 11:l=(l=t.documentElement)&&(l=l.namespaceURI)?h1(l):0;break;default:if(l=t.tagName,t=t.namespaceURI)t=h1(t),l=um(t,l);else switch(l){case"svg":l=1;break;case"math":l=2;break;default:l=0}}cl(Il),x(Il,l)}function Ju(){cl(Il),cl(Qa),cl(Gt)}function Lf(l){l.memoizedState!==null&&x(Fn,l);var t=Il.current,u=um(t,l.type);t!==u&&(x(Qa,l),x(Il,u))}function In(l){Qa.current===l&&(cl(Il),cl(Qa)),Fn.current===l&&(cl(Fn),$a._currentValue=uu)}var af,c0;function It(l){if(af===void 0)try{throw Error()}catch(u){var t=u.stack.trim().match(/\n( *(at )?)/);af=t&&t[1]||"",c0=-1<u.stack.indexOf(`
    at`)?" (<anonymous>)":-1<u.stack.indexOf("@")?"@unknown:0:0":""}return`
`+af+l+c0}var nf=!1;function ef(l,t){if(!l||nf)return"";nf=!0;var u=Error.prepareStackTrace;Error.prepareStackTrace=void 0;try{var a={DetermineComponentFrameRoot:function(){try{if(t){var s=function(){throw Error()};if(Object.defineProperty(s.prototype,"props",{set:function(){throw Error()}}),typeof Reflect=="object"&&Reflect.construct){try{Reflect.construct(s,[])}catch(S){var h=S}Reflect.construct(l,[],s)}else{try{s.call()}catch(S){h=S}l.call(s.prototype)}}else{try{throw Error()}catch(S){h=S}(s=l())&&typeof s.catch=="function"&&s.catch(function(){})}}catch(S){if(S&&h&&typeof S.stack=="string")return[S.stack,h.stack]}return[null,null]}};a.DetermineComponentFrameRoot.displayName="DetermineComponentFrameRoot";var n=Object.getOwnPropertyDescriptor(a.DetermineComponentFrameRoot,"name");n&&n.configurable&&Object.defineProperty(a.DetermineComponentFrameRoot,"name",{value:"DetermineComponentFrameRoot"});var e=a.DetermineComponentFrameRoot(),f=e[0],c=e[1];if(f&&c){var i=f.split(`
`),m=c.split(`
`);for(n=a=0;a<i.length&&!i[a].includes("DetermineComponentFrameRoot");)a++;for(;n<m.length&&!m[n].includes("DetermineComponentFrameRoot");)n++;if(a===i.length||n===m.length)for(a=i.length-1,n=m.length-1;1<=a&&0<=n&&i[a]!==m[n];)n--;for(;1<=a&&0<=n;a--,n--)if(i[a]!==m[n]){if(a!==1||n!==1)do if(a--,n--,0>n||i[a]!==m[n]){var g=`
`+i[a].replace(" at new "," at ");return l.displayName&&g.includes("<anonymous>")&&(g=g.replace("<anonymous>",l.displayName)),g}while(1<=a&&0<=n);break}}}finally{nf=!1,Error.prepareStackTrace=u}return(u=l?l.displayName||l.name:"")?It(u):""}function ld(l,t){switch(l.tag){case 26:case 27:case 5:return It(l.type);case 16:return It("Lazy");case 13:return l.child!==t&&t!==null?It("Suspense Fallback"):It("Suspense");case 19:return It("SuspenseList");case 0:case 15:return ef(l.type,!1);case 11:return ef(l.type.render,!1);case 1:return ef(l.type,!0);case 31:return It("Activity");default:return""}}function i0(l){try{var t="",u=null;do t+=ld(l,u),u=l,l=l.return;while(l);return t}catch(a){return`
Error generating stack: `+a.message+`
`+a.stack}}var Kf=Object.prototype.hasOwnProperty,Yc=nl.unstable_scheduleCallback,ff=nl.unstable_cancelCallback,td=nl.unstable_shouldYield,ud=nl.unstable_requestPaint,Hl=nl.unstable_now,ad=nl.unstable_getCurrentPriorityLevel,X1=nl.unstable_ImmediatePriority,Q1=nl.unstable_UserBlockingPriority,Pn=nl.unstable_NormalPriority,nd=nl.unstable_LowPriority,Z1=nl.unstable_IdlePriority,ed=nl.log,fd=nl.unstable_setDisableYieldValue,Pa=null,Nl=null;function qt(l){if(typeof ed=="function"&&fd(l),Nl&&typeof Nl.setStrictMode=="function")try{Nl.setStrictMode(Pa,l)}catch{}}var pl=Math.clz32?Math.clz32:yd,cd=Math.log,id=Math.LN2;function yd(l){return l>>>=0,l===0?32:31-(cd(l)/id|0)|0}var bn=256,zn=262144,En=4194304;function Pt(l){var t=l&42;if(t!==0)return t;switch(l&-l){case 1:return 1;case 2:return 2;case 4:return 4;case 8:return 8;case 16:return 16;case 32:return 32;case 64:return 64;case 128:return 128;case 256:case 512:case 1024:case 2048:case 4096:case 8192:case 16384:case 32768:case 65536:case 131072:return l&261888;case 262144:case 524288:case 1048576:case 2097152:return l&3932160;case 4194304:case 8388608:case 16777216:case 33554432:return l&62914560;case 67108864:return 67108864;case 134217728:return 134217728;case 268435456:return 268435456;case 536870912:return 536870912;case 1073741824:return 0;default:return l}}function Me(l,t,u){var a=l.pendingLanes;if(a===0)return 0;var n=0,e=l.suspendedLanes,f=l.pingedLanes;l=l.warmLanes;var c=a&134217727;return c!==0?(a=c&~e,a!==0?n=Pt(a):(f&=c,f!==0?n=Pt(f):u||(u=c&~l,u!==0&&(n=Pt(u))))):(c=a&~e,c!==0?n=Pt(c):f!==0?n=Pt(f):u||(u=a&~l,u!==0&&(n=Pt(u)))),n===0?0:t!==0&&t!==n&&(t&e)===0&&(e=n&-n,u=t&-t,e>=u||e===32&&(u&4194048)!==0)?t:n}function ln(l,t){return(l.pendingLanes&~(l.suspendedLanes&~l.pingedLanes)&t)===0}function vd(l,t){switch(l){case 1:case 2:case 4:case 8:case 64:return t+250;case 16:case 32:case 128:case 256:case 512:case 1024:case 2048:case 4096:case 8192:case 16384:case 32768:case 65536:case 131072:case 262144:case 524288:case 1048576:case 2097152:return t+5e3;case 4194304:case 8388608:case 16777216:case 33554432:return-1;case 67108864:case 134217728:case 268435456:case 536870912:case 1073741824:return-1;default:return-1}}function j1(){var l=En;return En<<=1,(En&62914560)===0&&(En=4194304),l}function cf(l){for(var t=[],u=0;31>u;u++)t.push(l);return t}function tn(l,t){l.pendingLanes|=t,t!==268435456&&(l.suspendedLanes=0,l.pingedLanes=0,l.warmLanes=0)}function md(l,t,u,a,n,e){var f=l.pendingLanes;l.pendingLanes=u,l.suspendedLanes=0,l.pingedLanes=0,l.warmLanes=0,l.expiredLanes&=u,l.entangledLanes&=u,l.errorRecoveryDisabledLanes&=u,l.shellSuspendCounter=0;var c=l.entanglements,i=l.expirationTimes,m=l.hiddenUpdates;for(u=f&~u;0<u;){var g=31-pl(u),s=1<<g;c[g]=0,i[g]=-1;var h=m[g];if(h!==null)for(m[g]=null,g=0;g<h.length;g++){var S=h[g];S!==null&&(S.lane&=-536870913)}u&=~s}a!==0&&V1(l,a,0),e!==0&&n===0&&l.tag!==0&&(l.suspendedLanes|=e&~(f&~t))}function V1(l,t,u){l.pendingLanes|=t,l.suspendedLanes&=~t;var a=31-pl(t);l.entangledLanes|=t,l.entanglements[a]=l.entanglements[a]|1073741824|u&261930}function x1(l,t){var u=l.entangledLanes|=t;for(l=l.entanglements;u;){var a=31-pl(u),n=1<<a;n&t|l[a]&t&&(l[a]|=t),u&=~n}}function L1(l,t){var u=t&-t;return u=(u&42)!==0?1:Cc(u),(u&(l.suspendedLanes|t))!==0?0:u}function Cc(l){switch(l){case 2:l=1;break;case 8:l=4;break;case 32:l=16;break;case 256:case 512:case 1024:case 2048:case 4096:case 8192:case 16384:case 32768:case 65536:case 131072:case 262144:case 524288:case 1048576:case 2097152:case 4194304:case 8388608:case 16777216:case 33554432:l=128;break;case 268435456:l=134217728;break;default:l=0}return l}function Gc(l){return l&=-l,2<l?8<l?(l&134217727)!==0?32:268435456:8:2}function K1(){var l=C.p;return l!==0?l:(l=window.event,l===void 0?32:hm(l.type))}function y0(l,t){var u=C.p;try{return C.p=l,t()}finally{C.p=u}}var $t=Math.random().toString(36).slice(2),yl="__reactFiber$"+$t,Al="__reactProps$"+$t,ua="__reactContainer$"+$t,Jf="__reactEvents$"+$t,dd="__reactListeners$"+$t,hd="__reactHandles$"+$t,v0="__reactResources$"+$t,un="__reactMarker$"+$t;function Xc(l){delete l[yl],delete l[Al],delete l[Jf],delete l[dd],delete l[hd]}function Hu(l){var t=l[yl];if(t)return t;for(var u=l.parentNode;u;){if(t=u[ua]||u[yl]){if(u=t.alternate,t.child!==null||u!==null&&u.child!==null)for(l=b1(l);l!==null;){if(u=l[yl])return u;l=b1(l)}return t}l=u,u=l.parentNode}return null}function aa(l){if(l=l[yl]||l[ua]){var t=l.tag;if(t===5||t===6||t===13||t===31||t===26||t===27||t===3)return l}return null}function Aa(l){var t=l.tag;if(t===5||t===26||t===27||t===6)return l.stateNode;throw Error(b(33))}function Qu(l){var t=l[v0];return t||(t=l[v0]={hoistableStyles:new Map,hoistableScripts:new Map}),t}function fl(l){l[un]=!0}var J1=new Set,r1={};function du(l,t){ru(l,t),ru(l+"Capture",t)}function ru(l,t){for(r1[l]=t,l=0;l<t.length;l++)J1.add(t[l])}var Sd=RegExp("^[:A-Z_a-z\\u00C0-\\u00D6\\u00D8-\\u00F6\\u00F8-\\u02FF\\u0370-\\u037D\\u037F-\\u1FFF\\u200C-\\u200D\\u2070-\\u218F\\u2C00-\\u2FEF\\u3001-\\uD7FF\\uF900-\\uFDCF\\uFDF0-\\uFFFD][:A-Z_a-z\\u00C0-\\u00D6\\u00D8-\\u00F6\\u00F8-\\u02FF\\u0370-\\u037D\\u037F-\\u1FFF\\u200C-\\u200D\\u2070-\\u218F\\u2C00-\\u2FEF\\u3001-\\uD7FF\\uF900-\\uFDCF\\uFDF0-\\uFFFD\\-.0-9\\u00B7\\u0300-\\u036F\\u203F-\\u2040]*$"),m0={},d0={};function gd(l){return Kf.call(d0,l)?!0:Kf.call(m0,l)?!1:Sd.test(l)?d0[l]=!0:(m0[l]=!0,!1)}function Cn(l,t,u){if(gd(t))if(u===null)l.removeAttribute(t);else{switch(typeof u){case"undefined":case"function":case"symbol":l.removeAttribute(t);return;case"boolean":var a=t.toLowerCase().slice(0,5);if(a!=="data-"&&a!=="aria-"){l.removeAttribute(t);return}}l.setAttribute(t,""+u)}}function Tn(l,t,u){if(u===null)l.removeAttribute(t);else{switch(typeof u){case"undefined":case"function":case"symbol":case"boolean":l.removeAttribute(t);return}l.setAttribute(t,""+u)}}function ut(l,t,u,a){if(a===null)l.removeAttribute(u);else{switch(typeof a){case"undefined":case"function":case"symbol":case"boolean":l.removeAttribute(u);return}l.setAttributeNS(t,u,""+a)}}function Gl(l){switch(typeof l){case"bigint":case"boolean":case"number":case"string":case"undefined":return l;case"object":return l;default:return""}}function w1(l){var t=l.type;return(l=l.nodeName)&&l.toLowerCase()==="input"&&(t==="checkbox"||t==="radio")}function od(l,t,u){var a=Object.getOwnPropertyDescriptor(l.constructor.prototype,t);if(!l.hasOwnProperty(t)&&typeof a<"u"&&typeof a.get=="function"&&typeof a.set=="function"){var n=a.get,e=a.set;return Object.defineProperty(l,t,{configurable:!0,get:function(){return n.call(this)},set:function(f){u=""+f,e.call(this,f)}}),Object.defineProperty(l,t,{enumerable:a.enumerable}),{getValue:function(){return u},setValue:function(f){u=""+f},stopTracking:function(){l._valueTracker=null,delete l[t]}}}}function rf(l){if(!l._valueTracker){var t=w1(l)?"checked":"value";l._valueTracker=od(l,t,""+l[t])}}function W1(l){if(!l)return!1;var t=l._valueTracker;if(!t)return!0;var u=t.getValue(),a="";return l&&(a=w1(l)?l.checked?"true":"false":l.value),l=a,l!==u?(t.setValue(l),!0):!1}function le(l){if(l=l||(typeof document<"u"?document:void 0),typeof l>"u")return null;try{return l.activeElement||l.body}catch{return l.body}}var sd=/[\n"\\]/g;function Zl(l){return l.replace(sd,function(t){return"\\"+t.charCodeAt(0).toString(16)+" "})}function wf(l,t,u,a,n,e,f,c){l.name="",f!=null&&typeof f!="function"&&typeof f!="symbol"&&typeof f!="boolean"?l.type=f:l.removeAttribute("type"),t!=null?f==="number"?(t===0&&l.value===""||l.value!=t)&&(l.value=""+Gl(t)):l.value!==""+Gl(t)&&(l.value=""+Gl(t)):f!=="submit"&&f!=="reset"||l.removeAttribute("value"),t!=null?Wf(l,f,Gl(t)):u!=null?Wf(l,f,Gl(u)):a!=null&&l.removeAttribute("value"),n==null&&e!=null&&(l.defaultChecked=!!e),n!=null&&(l.checked=n&&typeof n!="function"&&typeof n!="symbol"),c!=null&&typeof c!="function"&&typeof c!="symbol"&&typeof c!="boolean"?l.name=""+Gl(c):l.removeAttribute("name")}function $1(l,t,u,a,n,e,f,c){if(e!=null&&typeof e!="function"&&typeof e!="symbol"&&typeof e!="boolean"&&(l.type=e),t!=null||u!=null){if(!(e!=="submit"&&e!=="reset"||t!=null)){rf(l);return}u=u!=null?""+Gl(u):"",t=t!=null?""+Gl(t):u,c||t===l.value||(l.value=t),l.defaultValue=t}a=a??n,a=typeof a!="function"&&typeof a!="symbol"&&!!a,l.checked=c?l.checked:!!a,l.defaultChecked=!!a,f!=null&&typeof f!="function"&&typeof f!="symbol"&&typeof f!="boolean"&&(l.name=f),rf(l)}function Wf(l,t,u){t==="number"&&le(l.ownerDocument)===l||l.defaultValue===""+u||(l.defaultValue=""+u)}function Zu(l,t,u,a){if(l=l.options,t){t={};for(var n=0;n<u.length;n++)t["$"+u[n]]=!0;for(u=0;u<l.length;u++)n=t.hasOwnProperty("$"+l[u].value),l[u].selected!==n&&(l[u].selected=n),n&&a&&(l[u].defaultSelected=!0)}else{for(u=""+Gl(u),t=null,n=0;n<l.length;n++){if(l[n].value===u){l[n].selected=!0,a&&(l[n].defaultSelected=!0);return}t!==null||l[n].disabled||(t=l[n])}t!==null&&(t.selected=!0)}}function F1(l,t,u){if(t!=null&&(t=""+Gl(t),t!==l.value&&(l.value=t),u==null)){l.defaultValue!==t&&(l.defaultValue=t);return}l.defaultValue=u!=null?""+Gl(u):""}function k1(l,t,u,a){if(t==null){if(a!=null){if(u!=null)throw Error(b(92));if(Ta(a)){if(1<a.length)throw Error(b(93));a=a[0]}u=a}u==null&&(u=""),t=u}u=Gl(t),l.defaultValue=u,a=l.textContent,a===u&&a!==""&&a!==null&&(l.value=a),rf(l)}function wu(l,t){if(t){var u=l.firstChild;if(u&&u===l.lastChild&&u.nodeType===3){u.nodeValue=t;return}}l.textContent=t}var bd=new Set("animationIterationCount aspectRatio borderImageOutset borderImageSlice borderImageWidth boxFlex boxFlexGroup boxOrdinalGroup columnCount columns flex flexGrow flexPositive flexShrink flexNegative flexOrder gridArea gridRow gridRowEnd gridRowSpan gridRowStart gridColumn gridColumnEnd gridColumnSpan gridColumnStart fontWeight lineClamp lineHeight opacity order orphans scale tabSize widows zIndex zoom fillOpacity floodOpacity stopOpacity strokeDasharray strokeDashoffset strokeMiterlimit strokeOpacity strokeWidth MozAnimationIterationCount MozBoxFlex MozBoxFlexGroup MozLineClamp msAnimationIterationCount msFlex msZoom msFlexGrow msFlexNegative msFlexOrder msFlexPositive msFlexShrink msGridColumn msGridColumnSpan msGridRow msGridRowSpan WebkitAnimationIterationCount WebkitBoxFlex WebKitBoxFlexGroup WebkitBoxOrdinalGroup WebkitColumnCount WebkitColumns WebkitFlex WebkitFlexGrow WebkitFlexPositive WebkitFlexShrink WebkitLineClamp".split(" "));function h0(l,t,u){var a=t.indexOf("--")===0;u==null||typeof u=="boolean"||u===""?a?l.setProperty(t,""):t==="float"?l.cssFloat="":l[t]="":a?l.setProperty(t,u):typeof u!="number"||u===0||bd.has(t)?t==="float"?l.cssFloat=u:l[t]=(""+u).trim():l[t]=u+"px"}function I1(l,t,u){if(t!=null&&typeof t!="object")throw Error(b(62));if(l=l.style,u!=null){for(var a in u)!u.hasOwnProperty(a)||t!=null&&t.hasOwnProperty(a)||(a.indexOf("--")===0?l.setProperty(a,""):a==="float"?l.cssFloat="":l[a]="");for(var n in t)a=t[n],t.hasOwnProperty(n)&&u[n]!==a&&h0(l,n,a)}else for(var e in t)t.hasOwnProperty(e)&&h0(l,e,t[e])}function Qc(l){if(l.indexOf("-")===-1)return!1;switch(l){case"annotation-xml":case"color-profile":case"font-face":case"font-face-src":case"font-face-uri":case"font-face-format":case"font-face-name":case"missing-glyph":return!1;default:return!0}}var zd=new Map([["acceptCharset","accept-charset"],["htmlFor","for"],["httpEquiv","http-equiv"],["crossOrigin","crossorigin"],["accentHeight","accent-height"],["alignmentBaseline","alignment-baseline"],["arabicForm","arabic-form"],["baselineShift","baseline-shift"],["capHeight","cap-height"],["clipPath","clip-path"],["clipRule","clip-rule"],["colorInterpolation","color-interpolation"],["colorInterpolationFilters","color-interpolation-filters"],["colorProfile","color-profile"],["colorRendering","color-rendering"],["dominantBaseline","dominant-baseline"],["enableBackground","enable-background"],["fillOpacity","fill-opacity"],["fillRule","fill-rule"],["floodColor","flood-color"],["floodOpacity","flood-opacity"],["fontFamily","font-family"],["fontSize","font-size"],["fontSizeAdjust","font-size-adjust"],["fontStretch","font-stretch"],["fontStyle","font-style"],["fontVariant","font-variant"],["fontWeight","font-weight"],["glyphName","glyph-name"],["glyphOrientationHorizontal","glyph-orientation-horizontal"],["glyphOrientationVertical","glyph-orientation-vertical"],["horizAdvX","horiz-adv-x"],["horizOriginX","horiz-origin-x"],["imageRendering","image-rendering"],["letterSpacing","letter-spacing"],["lightingColor","lighting-color"],["markerEnd","marker-end"],["markerMid","marker-mid"],["markerStart","marker-start"],["overlinePosition","overline-position"],["overlineThickness","overline-thickness"],["paintOrder","paint-order"],["panose-1","panose-1"],["pointerEvents","pointer-events"],["renderingIntent","rendering-intent"],["shapeRendering","shape-rendering"],["stopColor","stop-color"],["stopOpacity","stop-opacity"],["strikethroughPosition","strikethrough-position"],["strikethroughThickness","strikethrough-thickness"],["strokeDasharray","stroke-dasharray"],["strokeDashoffset","stroke-dashoffset"],["strokeLinecap","stroke-linecap"],["strokeLinejoin","stroke-linejoin"],["strokeMiterlimit","stroke-miterlimit"],["strokeOpacity","stroke-opacity"],["strokeWidth","stroke-width"],["textAnchor","text-anchor"],["textDecoration","text-decoration"],["textRendering","text-rendering"],["transformOrigin","transform-origin"],["underlinePosition","underline-position"],["underlineThickness","underline-thickness"],["unicodeBidi","unicode-bidi"],["unicodeRange","unicode-range"],["unitsPerEm","units-per-em"],["vAlphabetic","v-alphabetic"],["vHanging","v-hanging"],["vIdeographic","v-ideographic"],["vMathematical","v-mathematical"],["vectorEffect","vector-effect"],["vertAdvY","vert-adv-y"],["vertOriginX","vert-origin-x"],["vertOriginY","vert-origin-y"],["wordSpacing","word-spacing"],["writingMode","writing-mode"],["xmlnsXlink","xmlns:xlink"],["xHeight","x-height"]]),Ed=/^[\u0000-\u001F ]*j[\r\n\t]*a[\r\n\t]*v[\r\n\t]*a[\r\n\t]*s[\r\n\t]*c[\r\n\t]*r[\r\n\t]*i[\r\n\t]*p[\r\n\t]*t[\r\n\t]*:/i;function Gn(l){return Ed.test(""+l)?"javascript:throw new Error('React has blocked a javascript: URL as a security precaution.')":l}function vt(){}var $f=null;function Zc(l){return l=l.target||l.srcElement||window,l.correspondingUseElement&&(l=l.correspondingUseElement),l.nodeType===3?l.parentNode:l}var Nu=null,ju=null;function S0(l){var t=aa(l);if(t&&(l=t.stateNode)){var u=l[Al]||null;l:switch(l=t.stateNode,t.type){case"input":if(wf(l,u.value,u.defaultValue,u.defaultValue,u.checked,u.defaultChecked,u.type,u.name),t=u.name,u.type==="radio"&&t!=null){for(u=l;u.parentNode;)u=u.parentNode;for(u=u.querySelectorAll('input[name="'+Zl(""+t)+'"][type="radio"]'),t=0;t<u.length;t++){var a=u[t];if(a!==l&&a.form===l.form){var n=a[Al]||null;if(!n)throw Error(b(90));wf(a,n.value,n.defaultValue,n.defaultValue,n.checked,n.defaultChecked,n.type,n.name)}}for(t=0;t<u.length;t++)a=u[t],a.form===l.form&&W1(a)}break l;case"textarea":F1(l,u.value,u.defaultValue);break l;case"select":t=u.value,t!=null&&Zu(l,!!u.multiple,t,!1)}}}var yf=!1;function P1(l,t,u){if(yf)return l(t,u);yf=!0;try{var a=l(t);return a}finally{if(yf=!1,(Nu!==null||ju!==null)&&(Xe(),Nu&&(t=Nu,l=ju,ju=Nu=null,S0(t),l)))for(t=0;t<l.length;t++)S0(l[t])}}function Za(l,t){var u=l.stateNode;if(u===null)return null;var a=u[Al]||null;if(a===null)return null;u=a[t];l:switch(t){case"onClick":case"onClickCapture":case"onDoubleClick":case"onDoubleClickCapture":case"onMouseDown":case"onMouseDownCapture":case"onMouseMove":case"onMouseMoveCapture":case"onMouseUp":case"onMouseUpCapture":case"onMouseEnter":(a=!a.disabled)||(l=l.type,a=!(l==="button"||l==="input"||l==="select"||l==="textarea")),l=!a;break l;default:l=!1}if(l)return null;if(u&&typeof u!="function")throw Error(b(231,t,typeof u));return u}var gt=!(typeof window>"u"||typeof window.document>"u"||typeof window.document.createElement>"u"),Ff=!1;if(gt)try{Tu={},Object.defineProperty(Tu,"passive",{get:function(){Ff=!0}}),window.addEventListener("test",Tu,Tu),window.removeEventListener("test",Tu,Tu)}catch{Ff=!1}var Tu,Rt=null,jc=null,Xn=null;function ly(){if(Xn)return Xn;var l,t=jc,u=t.length,a,n="value"in Rt?Rt.value:Rt.textContent,e=n.length;for(l=0;l<u&&t[l]===n[l];l++);var f=u-l;for(a=1;a<=f&&t[u-a]===n[e-a];a++);return Xn=n.slice(l,1<a?1-a:void 0)}function Qn(l){var t=l.keyCode;return"charCode"in l?(l=l.charCode,l===0&&t===13&&(l=13)):l=t,l===10&&(l=13),32<=l||l===13?l:0}function An(){return!0}function g0(){return!1}function Ol(l){function t(u,a,n,e,f){this._reactName=u,this._targetInst=n,this.type=a,this.nativeEvent=e,this.target=f,this.currentTarget=null;for(var c in l)l.hasOwnProperty(c)&&(u=l[c],this[c]=u?u(e):e[c]);return this.isDefaultPrevented=(e.defaultPrevented!=null?e.defaultPrevented:e.returnValue===!1)?An:g0,this.isPropagationStopped=g0,this}return r(t.prototype,{preventDefault:function(){this.defaultPrevented=!0;var u=this.nativeEvent;u&&(u.preventDefault?u.preventDefault():typeof u.returnValue!="unknown"&&(u.returnValue=!1),this.isDefaultPrevented=An)},stopPropagation:function(){var u=this.nativeEvent;u&&(u.stopPropagation?u.stopPropagation():typeof u.cancelBubble!="unknown"&&(u.cancelBubble=!0),this.isPropagationStopped=An)},persist:function(){},isPersistent:An}),t}var hu={eventPhase:0,bubbles:0,cancelable:0,timeStamp:function(l){return l.timeStamp||Date.now()},defaultPrevented:0,isTrusted:0},De=Ol(hu),an=r({},hu,{view:0,detail:0}),Td=Ol(an),vf,mf,Sa,Ue=r({},an,{screenX:0,screenY:0,clientX:0,clientY:0,pageX:0,pageY:0,ctrlKey:0,shiftKey:0,altKey:0,metaKey:0,getModifierState:Vc,button:0,buttons:0,relatedTarget:function(l){return l.relatedTarget===void 0?l.fromElement===l.srcElement?l.toElement:l.fromElement:l.relatedTarget},movementX:function(l){return"movementX"in l?l.movementX:(l!==Sa&&(Sa&&l.type==="mousemove"?(vf=l.screenX-Sa.screenX,mf=l.screenY-Sa.screenY):mf=vf=0,Sa=l),vf)},movementY:function(l){return"movementY"in l?l.movementY:mf}}),o0=Ol(Ue),Ad=r({},Ue,{dataTransfer:0}),Od=Ol(Ad),_d=r({},an,{relatedTarget:0}),df=Ol(_d),Md=r({},hu,{animationName:0,elapsedTime:0,pseudoElement:0}),Dd=Ol(Md),Ud=r({},hu,{clipboardData:function(l){return"clipboardData"in l?l.clipboardData:window.clipboardData}}),Hd=Ol(Ud),Nd=r({},hu,{data:0}),s0=Ol(Nd),pd={Esc:"Escape",Spacebar:" ",Left:"ArrowLeft",Up:"ArrowUp",Right:"ArrowRight",Down:"ArrowDown",Del:"Delete",Win:"OS",Menu:"ContextMenu",Apps:"ContextMenu",Scroll:"ScrollLock",MozPrintableKey:"Unidentified"},qd={8:"Backspace",9:"Tab",12:"Clear",13:"Enter",16:"Shift",17:"Control",18:"Alt",19:"Pause",20:"CapsLock",27:"Escape",32:" ",33:"PageUp",34:"PageDown",35:"End",36:"Home",37:"ArrowLeft",38:"ArrowUp",39:"ArrowRight",40:"ArrowDown",45:"Insert",46:"Delete",112:"F1",113:"F2",114:"F3",115:"F4",116:"F5",117:"F6",118:"F7",119:"F8",120:"F9",121:"F10",122:"F11",123:"F12",144:"NumLock",145:"ScrollLock",224:"Meta"},Rd={Alt:"altKey",Control:"ctrlKey",Meta:"metaKey",Shift:"shiftKey"};function Bd(l){var t=this.nativeEvent;return t.getModifierState?t.getModifierState(l):(l=Rd[l])?!!t[l]:!1}function Vc(){return Bd}var Yd=r({},an,{key:function(l){if(l.key){var t=pd[l.key]||l.key;if(t!=="Unidentified")return t}return l.type==="keypress"?(l=Qn(l),l===13?"Enter":String.fromCharCode(l)):l.type==="keydown"||l.type==="keyup"?qd[l.keyCode]||"Unidentified":""},code:0,location:0,ctrlKey:0,shiftKey:0,altKey:0,metaKey:0,repeat:0,locale:0,getModifierState:Vc,charCode:function(l){return l.type==="keypress"?Qn(l):0},keyCode:function(l){return l.type==="keydown"||l.type==="keyup"?l.keyCode:0},which:function(l){return l.type==="keypress"?Qn(l):l.type==="keydown"||l.type==="keyup"?l.keyCode:0}}),Cd=Ol(Yd),Gd=r({},Ue,{pointerId:0,width:0,height:0,pressure:0,tangentialPressure:0,tiltX:0,tiltY:0,twist:0,pointerType:0,isPrimary:0}),b0=Ol(Gd),Xd=r({},an,{touches:0,targetTouches:0,changedTouches:0,altKey:0,metaKey:0,ctrlKey:0,shiftKey:0,getModifierState:Vc}),Qd=Ol(Xd),Zd=r({},hu,{propertyName:0,elapsedTime:0,pseudoElement:0}),jd=Ol(Zd),Vd=r({},Ue,{deltaX:function(l){return"deltaX"in l?l.deltaX:"wheelDeltaX"in l?-l.wheelDeltaX:0},deltaY:function(l){return"deltaY"in l?l.deltaY:"wheelDeltaY"in l?-l.wheelDeltaY:"wheelDelta"in l?-l.wheelDelta:0},deltaZ:0,deltaMode:0}),xd=Ol(Vd),Ld=r({},hu,{newState:0,oldState:0}),Kd=Ol(Ld),Jd=[9,13,27,32],xc=gt&&"CompositionEvent"in window,Ma=null;gt&&"documentMode"in document&&(Ma=document.documentMode);var rd=gt&&"TextEvent"in window&&!Ma,ty=gt&&(!xc||Ma&&8<Ma&&11>=Ma),z0=" ",E0=!1;function uy(l,t){switch(l){case"keyup":return Jd.indexOf(t.keyCode)!==-1;case"keydown":return t.keyCode!==229;case"keypress":case"mousedown":case"focusout":return!0;default:return!1}}function ay(l){return l=l.detail,typeof l=="object"&&"data"in l?l.data:null}var pu=!1;function wd(l,t){switch(l){case"compositionend":return ay(t);case"keypress":return t.which!==32?null:(E0=!0,z0);case"textInput":return l=t.data,l===z0&&E0?null:l;default:return null}}function Wd(l,t){if(pu)return l==="compositionend"||!xc&&uy(l,t)?(l=ly(),Xn=jc=Rt=null,pu=!1,l):null;switch(l){case"paste":return null;case"keypress":if(!(t.ctrlKey||t.altKey||t.metaKey)||t.ctrlKey&&t.altKey){if(t.char&&1<t.char.length)return t.char;if(t.which)return String.fromCharCode(t.which)}return null;case"compositionend":return ty&&t.locale!=="ko"?null:t.data;default:return null}}var $d={color:!0,date:!0,datetime:!0,"datetime-local":!0,email:!0,month:!0,number:!0,password:!0,range:!0,search:!0,tel:!0,text:!0,time:!0,url:!0,week:!0};function T0(l){var t=l&&l.nodeName&&l.nodeName.toLowerCase();return t==="input"?!!$d[l.type]:t==="textarea"}function ny(l,t,u,a){Nu?ju?ju.push(a):ju=[a]:Nu=a,t=be(t,"onChange"),0<t.length&&(u=new De("onChange","change",null,u,a),l.push({event:u,listeners:t}))}var Da=null,ja=null;function Fd(l){Pv(l,0)}function He(l){var t=Aa(l);if(W1(t))return l}function A0(l,t){if(l==="change")return t}var ey=!1;gt&&(gt?(_n="oninput"in document,_n||(hf=document.createElement("div"),hf.setAttribute("oninput","return;"),_n=typeof hf.oninput=="function"),On=_n):On=!1,ey=On&&(!document.documentMode||9<document.documentMode));var On,_n,hf;function O0(){Da&&(Da.detachEvent("onpropertychange",fy),ja=Da=null)}function fy(l){if(l.propertyName==="value"&&He(ja)){var t=[];ny(t,ja,l,Zc(l)),P1(Fd,t)}}function kd(l,t,u){l==="focusin"?(O0(),Da=t,ja=u,Da.attachEvent("onpropertychange",fy)):l==="focusout"&&O0()}function Id(l){if(l==="selectionchange"||l==="keyup"||l==="keydown")return He(ja)}function Pd(l,t){if(l==="click")return He(t)}function lh(l,t){if(l==="input"||l==="change")return He(t)}function th(l,t){return l===t&&(l!==0||1/l===1/t)||l!==l&&t!==t}var Rl=typeof Object.is=="function"?Object.is:th;function Va(l,t){if(Rl(l,t))return!0;if(typeof l!="object"||l===null||typeof t!="object"||t===null)return!1;var u=Object.keys(l),a=Object.keys(t);if(u.length!==a.length)return!1;for(a=0;a<u.length;a++){var n=u[a];if(!Kf.call(t,n)||!Rl(l[n],t[n]))return!1}return!0}function _0(l){for(;l&&l.firstChild;)l=l.firstChild;return l}function M0(l,t){var u=_0(l);l=0;for(var a;u;){if(u.nodeType===3){if(a=l+u.textContent.length,l<=t&&a>=t)return{node:u,offset:t-l};l=a}l:{for(;u;){if(u.nextSibling){u=u.nextSibling;break l}u=u.parentNode}u=void 0}u=_0(u)}}function cy(l,t){return l&&t?l===t?!0:l&&l.nodeType===3?!1:t&&t.nodeType===3?cy(l,t.parentNode):"contains"in l?l.contains(t):l.compareDocumentPosition?!!(l.compareDocumentPosition(t)&16):!1:!1}function iy(l){l=l!=null&&l.ownerDocument!=null&&l.ownerDocument.defaultView!=null?l.ownerDocument.defaultView:window;for(var t=le(l.document);t instanceof l.HTMLIFrameElement;){try{var u=typeof t.contentWindow.location.href=="string"}catch{u=!1}if(u)l=t.contentWindow;else break;t=le(l.document)}return t}function Lc(l){var t=l&&l.nodeName&&l.nodeName.toLowerCase();return t&&(t==="input"&&(l.type==="text"||l.type==="search"||l.type==="tel"||l.type==="url"||l.type==="password")||t==="textarea"||l.contentEditable==="true")}var uh=gt&&"documentMode"in document&&11>=document.documentMode,qu=null,kf=null,Ua=null,If=!1;function D0(l,t,u){var a=u.window===u?u.document:u.nodeType===9?u:u.ownerDocument;If||qu==null||qu!==le(a)||(a=qu,"selectionStart"in a&&Lc(a)?a={start:a.selectionStart,end:a.selectionEnd}:(a=(a.ownerDocument&&a.ownerDocument.defaultView||window).getSelection(),a={anchorNode:a.anchorNode,anchorOffset:a.anchorOffset,focusNode:a.focusNode,focusOffset:a.focusOffset}),Ua&&Va(Ua,a)||(Ua=a,a=be(kf,"onSelect"),0<a.length&&(t=new De("onSelect","select",null,t,u),l.push({event:t,listeners:a}),t.target=qu)))}function kt(l,t){var u={};return u[l.toLowerCase()]=t.toLowerCase(),u["Webkit"+l]="webkit"+t,u["Moz"+l]="moz"+t,u}var Ru={animationend:kt("Animation","AnimationEnd"),animationiteration:kt("Animation","AnimationIteration"),animationstart:kt("Animation","AnimationStart"),transitionrun:kt("Transition","TransitionRun"),transitionstart:kt("Transition","TransitionStart"),transitioncancel:kt("Transition","TransitionCancel"),transitionend:kt("Transition","TransitionEnd")},Sf={},yy={};gt&&(yy=document.createElement("div").style,"AnimationEvent"in window||(delete Ru.animationend.animation,delete Ru.animationiteration.animation,delete Ru.animationstart.animation),"TransitionEvent"in window||delete Ru.transitionend.transition);function Su(l){if(Sf[l])return Sf[l];if(!Ru[l])return l;var t=Ru[l],u;for(u in t)if(t.hasOwnProperty(u)&&u in yy)return Sf[l]=t[u];return l}var vy=Su("animationend"),my=Su("animationiteration"),dy=Su("animationstart"),ah=Su("transitionrun"),nh=Su("transitionstart"),eh=Su("transitioncancel"),hy=Su("transitionend"),Sy=new Map,Pf="abort auxClick beforeToggle cancel canPlay canPlayThrough click close contextMenu copy cut drag dragEnd dragEnter dragExit dragLeave dragOver dragStart drop durationChange emptied encrypted ended error gotPointerCapture input invalid keyDown keyPress keyUp load loadedData loadedMetadata loadStart lostPointerCapture mouseDown mouseMove mouseOut mouseOver mouseUp paste pause play playing pointerCancel pointerDown pointerMove pointerOut pointerOver pointerUp progress rateChange reset resize seeked seeking stalled submit suspend timeUpdate touchCancel touchEnd touchStart volumeChange scroll toggle touchMove waiting wheel".split(" ");Pf.push("scrollEnd");function wl(l,t){Sy.set(l,t),du(t,[l])}var te=typeof reportError=="function"?reportError:function(l){if(typeof window=="object"&&typeof window.ErrorEvent=="function"){var t=new window.ErrorEvent("error",{bubbles:!0,cancelable:!0,message:typeof l=="object"&&l!==null&&typeof l.message=="string"?String(l.message):String(l),error:l});if(!window.dispatchEvent(t))return}else if(typeof process=="object"&&typeof process.emit=="function"){process.emit("uncaughtException",l);return}console.error(l)},Cl=[],Bu=0,Kc=0;function Ne(){for(var l=Bu,t=Kc=Bu=0;t<l;){var u=Cl[t];Cl[t++]=null;var a=Cl[t];Cl[t++]=null;var n=Cl[t];Cl[t++]=null;var e=Cl[t];if(Cl[t++]=null,a!==null&&n!==null){var f=a.pending;f===null?n.next=n:(n.next=f.next,f.next=n),a.pending=n}e!==0&&gy(u,n,e)}}function pe(l,t,u,a){Cl[Bu++]=l,Cl[Bu++]=t,Cl[Bu++]=u,Cl[Bu++]=a,Kc|=a,l.lanes|=a,l=l.alternate,l!==null&&(l.lanes|=a)}function Jc(l,t,u,a){return pe(l,t,u,a),ue(l)}function gu(l,t){return pe(l,null,null,t),ue(l)}function gy(l,t,u){l.lanes|=u;var a=l.alternate;a!==null&&(a.lanes|=u);for(var n=!1,e=l.return;e!==null;)e.childLanes|=u,a=e.alternate,a!==null&&(a.childLanes|=u),e.tag===22&&(l=e.stateNode,l===null||l._visibility&1||(n=!0)),l=e,e=e.return;return l.tag===3?(e=l.stateNode,n&&t!==null&&(n=31-pl(u),l=e.hiddenUpdates,a=l[n],a===null?l[n]=[t]:a.push(t),t.lane=u|536870912),e):null}function ue(l){if(50<Ga)throw Ga=0,Ec=null,Error(b(185));for(var t=l.return;t!==null;)l=t,t=l.return;return l.tag===3?l.stateNode:null}var Yu={};function fh(l,t,u,a){this.tag=l,this.key=u,this.sibling=this.child=this.return=this.stateNode=this.type=this.elementType=null,this.index=0,this.refCleanup=this.ref=null,this.pendingProps=t,this.dependencies=this.memoizedState=this.updateQueue=this.memoizedProps=null,this.mode=a,this.subtreeFlags=this.flags=0,this.deletions=null,this.childLanes=this.lanes=0,this.alternate=null}function Dl(l,t,u,a){return new fh(l,t,u,a)}function rc(l){return l=l.prototype,!(!l||!l.isReactComponent)}function dt(l,t){var u=l.alternate;return u===null?(u=Dl(l.tag,t,l.key,l.mode),u.elementType=l.elementType,u.type=l.type,u.stateNode=l.stateNode,u.alternate=l,l.alternate=u):(u.pendingProps=t,u.type=l.type,u.flags=0,u.subtreeFlags=0,u.deletions=null),u.flags=l.flags&65011712,u.childLanes=l.childLanes,u.lanes=l.lanes,u.child=l.child,u.memoizedProps=l.memoizedProps,u.memoizedState=l.memoizedState,u.updateQueue=l.updateQueue,t=l.dependencies,u.dependencies=t===null?null:{lanes:t.lanes,firstContext:t.firstContext},u.sibling=l.sibling,u.index=l.index,u.ref=l.ref,u.refCleanup=l.refCleanup,u}function oy(l,t){l.flags&=65011714;var u=l.alternate;return u===null?(l.childLanes=0,l.lanes=t,l.child=null,l.subtreeFlags=0,l.memoizedProps=null,l.memoizedState=null,l.updateQueue=null,l.dependencies=null,l.stateNode=null):(l.childLanes=u.childLanes,l.lanes=u.lanes,l.child=u.child,l.subtreeFlags=0,l.deletions=null,l.memoizedProps=u.memoizedProps,l.memoizedState=u.memoizedState,l.updateQueue=u.updateQueue,l.type=u.type,t=u.dependencies,l.dependencies=t===null?null:{lanes:t.lanes,firstContext:t.firstContext}),l}function Zn(l,t,u,a,n,e){var f=0;if(a=l,typeof l=="function")rc(l)&&(f=1);else if(typeof l=="string")f=y2(l,u,Il.current)?26:l==="html"||l==="head"||l==="body"?27:5;else l:switch(l){case jf:return l=Dl(31,u,t,n),l.elementType=jf,l.lanes=e,l;case Du:return au(u.children,n,e,t);case C1:f=8,n|=24;break;case Xf:return l=Dl(12,u,t,n|2),l.elementType=Xf,l.lanes=e,l;case Qf:return l=Dl(13,u,t,n),l.elementType=Qf,l.lanes=e,l;case Zf:return l=Dl(19,u,t,n),l.elementType=Zf,l.lanes=e,l;default:if(typeof l=="object"&&l!==null)switch(l.$$typeof){case yt:f=10;break l;case G1:f=9;break l;case Rc:f=11;break l;case Bc:f=14;break l;case Mt:f=16,a=null;break l}f=29,u=Error(b(130,l===null?"null":typeof l,"")),a=null}return t=Dl(f,u,t,n),t.elementType=l,t.type=a,t.lanes=e,t}function au(l,t,u,a){return l=Dl(7,l,a,t),l.lanes=u,l}function gf(l,t,u){return l=Dl(6,l,null,t),l.lanes=u,l}function sy(l){var t=Dl(18,null,null,0);return t.stateNode=l,t}function of(l,t,u){return t=Dl(4,l.children!==null?l.children:[],l.key,t),t.lanes=u,t.stateNode={containerInfo:l.containerInfo,pendingChildren:null,implementation:l.implementation},t}var U0=new WeakMap;function jl(l,t){if(typeof l=="object"&&l!==null){var u=U0.get(l);return u!==void 0?u:(t={value:l,source:t,stack:i0(t)},U0.set(l,t),t)}return{value:l,source:t,stack:i0(t)}}var Cu=[],Gu=0,ae=null,xa=0,Xl=[],Ql=0,Jt=null,$l=1,Fl="";function ct(l,t){Cu[Gu++]=xa,Cu[Gu++]=ae,ae=l,xa=t}function by(l,t,u){Xl[Ql++]=$l,Xl[Ql++]=Fl,Xl[Ql++]=Jt,Jt=l;var a=$l;l=Fl;var n=32-pl(a)-1;a&=~(1<<n),u+=1;var e=32-pl(t)+n;if(30<e){var f=n-n%5;e=(a&(1<<f)-1).toString(32),a>>=f,n-=f,$l=1<<32-pl(t)+n|u<<n|a,Fl=e+l}else $l=1<<e|u<<n|a,Fl=l}function wc(l){l.return!==null&&(ct(l,1),by(l,1,0))}function Wc(l){for(;l===ae;)ae=Cu[--Gu],Cu[Gu]=null,xa=Cu[--Gu],Cu[Gu]=null;for(;l===Jt;)Jt=Xl[--Ql],Xl[Ql]=null,Fl=Xl[--Ql],Xl[Ql]=null,$l=Xl[--Ql],Xl[Ql]=null}function zy(l,t){Xl[Ql++]=$l,Xl[Ql++]=Fl,Xl[Ql++]=Jt,$l=t.id,Fl=t.overflow,Jt=l}var vl=null,J=null,q=!1,Xt=null,Vl=!1,lc=Error(b(519));function rt(l){var t=Error(b(418,1<arguments.length&&arguments[1]!==void 0&&arguments[1]?"text":"HTML",""));throw La(jl(t,l)),lc}function H0(l){var t=l.stateNode,u=l.type,a=l.memoizedProps;switch(t[yl]=l,t[Al]=a,u){case"dialog":U("cancel",t),U("close",t);break;case"iframe":case"object":case"embed":U("load",t);break;case"video":case"audio":for(u=0;u<wa.length;u++)U(wa[u],t);break;case"source":U("error",t);break;case"img":case"image":case"link":U("error",t),U("load",t);break;case"details":U("toggle",t);break;case"input":U("invalid",t),$1(t,a.value,a.defaultValue,a.checked,a.defaultChecked,a.type,a.name,!0);break;case"select":U("invalid",t);break;case"textarea":U("invalid",t),k1(t,a.value,a.defaultValue,a.children)}u=a.children,typeof u!="string"&&typeof u!="number"&&typeof u!="bigint"||t.textContent===""+u||a.suppressHydrationWarning===!0||tm(t.textContent,u)?(a.popover!=null&&(U("beforetoggle",t),U("toggle",t)),a.onScroll!=null&&U("scroll",t),a.onScrollEnd!=null&&U("scrollend",t),a.onClick!=null&&(t.onclick=vt),t=!0):t=!1,t||rt(l,!0)}function N0(l){for(vl=l.return;vl;)switch(vl.tag){case 5:case 31:case 13:Vl=!1;return;case 27:case 3:Vl=!0;return;default:vl=vl.return}}function Au(l){if(l!==vl)return!1;if(!q)return N0(l),q=!0,!1;var t=l.tag,u;if((u=t!==3&&t!==27)&&((u=t===5)&&(u=l.type,u=!(u!=="form"&&u!=="button")||Mc(l.type,l.memoizedProps)),u=!u),u&&J&&rt(l),N0(l),t===13){if(l=l.memoizedState,l=l!==null?l.dehydrated:null,!l)throw Error(b(317));J=s1(l)}else if(t===31){if(l=l.memoizedState,l=l!==null?l.dehydrated:null,!l)throw Error(b(317));J=s1(l)}else t===27?(t=J,Ft(l.type)?(l=Nc,Nc=null,J=l):J=t):J=vl?Ll(l.stateNode.nextSibling):null;return!0}function cu(){J=vl=null,q=!1}function sf(){var l=Xt;return l!==null&&(El===null?El=l:El.push.apply(El,l),Xt=null),l}function La(l){Xt===null?Xt=[l]:Xt.push(l)}var tc=Pl(null),ou=null,mt=null;function Ut(l,t,u){x(tc,t._currentValue),t._currentValue=u}function ht(l){l._currentValue=tc.current,cl(tc)}function uc(l,t,u){for(;l!==null;){var a=l.alternate;if((l.childLanes&t)!==t?(l.childLanes|=t,a!==null&&(a.childLanes|=t)):a!==null&&(a.childLanes&t)!==t&&(a.childLanes|=t),l===u)break;l=l.return}}function ac(l,t,u,a){var n=l.child;for(n!==null&&(n.return=l);n!==null;){var e=n.dependencies;if(e!==null){var f=n.child;e=e.firstContext;l:for(;e!==null;){var c=e;e=n;for(var i=0;i<t.length;i++)if(c.context===t[i]){e.lanes|=u,c=e.alternate,c!==null&&(c.lanes|=u),uc(e.return,u,l),a||(f=null);break l}e=c.next}}else if(n.tag===18){if(f=n.return,f===null)throw Error(b(341));f.lanes|=u,e=f.alternate,e!==null&&(e.lanes|=u),uc(f,u,l),f=null}else f=n.child;if(f!==null)f.return=n;else for(f=n;f!==null;){if(f===l){f=null;break}if(n=f.sibling,n!==null){n.return=f.return,f=n;break}f=f.return}n=f}}function na(l,t,u,a){l=null;for(var n=t,e=!1;n!==null;){if(!e){if((n.flags&524288)!==0)e=!0;else if((n.flags&262144)!==0)break}if(n.tag===10){var f=n.alternate;if(f===null)throw Error(b(387));if(f=f.memoizedProps,f!==null){var c=n.type;Rl(n.pendingProps.value,f.value)||(l!==null?l.push(c):l=[c])}}else if(n===Fn.current){if(f=n.alternate,f===null)throw Error(b(387));f.memoizedState.memoizedState!==n.memoizedState.memoizedState&&(l!==null?l.push($a):l=[$a])}n=n.return}l!==null&&ac(t,l,u,a),t.flags|=262144}function ne(l){for(l=l.firstContext;l!==null;){if(!Rl(l.context._currentValue,l.memoizedValue))return!0;l=l.next}return!1}function iu(l){ou=l,mt=null,l=l.dependencies,l!==null&&(l.firstContext=null)}function ml(l){return Ey(ou,l)}function Mn(l,t){return ou===null&&iu(l),Ey(l,t)}function Ey(l,t){var u=t._currentValue;if(t={context:t,memoizedValue:u,next:null},mt===null){if(l===null)throw Error(b(308));mt=t,l.dependencies={lanes:0,firstContext:t},l.flags|=524288}else mt=mt.next=t;return u}var ch=typeof AbortController<"u"?AbortController:function(){var l=[],t=this.signal={aborted:!1,addEventListener:function(u,a){l.push(a)}};this.abort=function(){t.aborted=!0,l.forEach(function(u){return u()})}},ih=nl.unstable_scheduleCallback,yh=nl.unstable_NormalPriority,tl={$$typeof:yt,Consumer:null,Provider:null,_currentValue:null,_currentValue2:null,_threadCount:0};function $c(){return{controller:new ch,data:new Map,refCount:0}}function nn(l){l.refCount--,l.refCount===0&&ih(yh,function(){l.controller.abort()})}var Ha=null,nc=0,Wu=0,Vu=null;function vh(l,t){if(Ha===null){var u=Ha=[];nc=0,Wu=Ei(),Vu={status:"pending",value:void 0,then:function(a){u.push(a)}}}return nc++,t.then(p0,p0),t}function p0(){if(--nc===0&&Ha!==null){Vu!==null&&(Vu.status="fulfilled");var l=Ha;Ha=null,Wu=0,Vu=null;for(var t=0;t<l.length;t++)(0,l[t])()}}function mh(l,t){var u=[],a={status:"pending",value:null,reason:null,then:function(n){u.push(n)}};return l.then(function(){a.status="fulfilled",a.value=t;for(var n=0;n<u.length;n++)(0,u[n])(t)},function(n){for(a.status="rejected",a.reason=n,n=0;n<u.length;n++)(0,u[n])(void 0)}),a}var q0=O.S;O.S=function(l,t){Yv=Hl(),typeof t=="object"&&t!==null&&typeof t.then=="function"&&vh(l,t),q0!==null&&q0(l,t)};var nu=Pl(null);function Fc(){var l=nu.current;return l!==null?l:V.pooledCache}function jn(l,t){t===null?x(nu,nu.current):x(nu,t.pool)}function Ty(){var l=Fc();return l===null?null:{parent:tl._currentValue,pool:l}}var ea=Error(b(460)),kc=Error(b(474)),qe=Error(b(542)),ee={then:function(){}};function R0(l){return l=l.status,l==="fulfilled"||l==="rejected"}function Ay(l,t,u){switch(u=l[u],u===void 0?l.push(t):u!==t&&(t.then(vt,vt),t=u),t.status){case"fulfilled":return t.value;case"rejected":throw l=t.reason,Y0(l),l;default:if(typeof t.status=="string")t.then(vt,vt);else{if(l=V,l!==null&&100<l.shellSuspendCounter)throw Error(b(482));l=t,l.status="pending",l.then(function(a){if(t.status==="pending"){var n=t;n.status="fulfilled",n.value=a}},function(a){if(t.status==="pending"){var n=t;n.status="rejected",n.reason=a}})}switch(t.status){case"fulfilled":return t.value;case"rejected":throw l=t.reason,Y0(l),l}throw eu=t,ea}}function lu(l){try{var t=l._init;return t(l._payload)}catch(u){throw u!==null&&typeof u=="object"&&typeof u.then=="function"?(eu=u,ea):u}}var eu=null;function B0(){if(eu===null)throw Error(b(459));var l=eu;return eu=null,l}function Y0(l){if(l===ea||l===qe)throw Error(b(483))}var xu=null,Ka=0;function Dn(l){var t=Ka;return Ka+=1,xu===null&&(xu=[]),Ay(xu,l,t)}function ga(l,t){t=t.props.ref,l.ref=t!==void 0?t:null}function Un(l,t){throw t.$$typeof===km?Error(b(525)):(l=Object.prototype.toString.call(t),Error(b(31,l==="[object Object]"?"object with keys {"+Object.keys(t).join(", ")+"}":l)))}function Oy(l){function t(v,y){if(l){var d=v.deletions;d===null?(v.deletions=[y],v.flags|=16):d.push(y)}}function u(v,y){if(!l)return null;for(;y!==null;)t(v,y),y=y.sibling;return null}function a(v){for(var y=new Map;v!==null;)v.key!==null?y.set(v.key,v):y.set(v.index,v),v=v.sibling;return y}function n(v,y){return v=dt(v,y),v.index=0,v.sibling=null,v}function e(v,y,d){return v.index=d,l?(d=v.alternate,d!==null?(d=d.index,d<y?(v.flags|=67108866,y):d):(v.flags|=67108866,y)):(v.flags|=1048576,y)}function f(v){return l&&v.alternate===null&&(v.flags|=67108866),v}function c(v,y,d,o){return y===null||y.tag!==6?(y=gf(d,v.mode,o),y.return=v,y):(y=n(y,d),y.return=v,y)}function i(v,y,d,o){var T=d.type;return T===Du?g(v,y,d.props.children,o,d.key):y!==null&&(y.elementType===T||typeof T=="object"&&T!==null&&T.$$typeof===Mt&&lu(T)===y.type)?(y=n(y,d.props),ga(y,d),y.return=v,y):(y=Zn(d.type,d.key,d.props,null,v.mode,o),ga(y,d),y.return=v,y)}function m(v,y,d,o){return y===null||y.tag!==4||y.stateNode.containerInfo!==d.containerInfo||y.stateNode.implementation!==d.implementation?(y=of(d,v.mode,o),y.return=v,y):(y=n(y,d.children||[]),y.return=v,y)}function g(v,y,d,o,T){return y===null||y.tag!==7?(y=au(d,v.mode,o,T),y.return=v,y):(y=n(y,d),y.return=v,y)}function s(v,y,d){if(typeof y=="string"&&y!==""||typeof y=="number"||typeof y=="bigint")return y=gf(""+y,v.mode,d),y.return=v,y;if(typeof y=="object"&&y!==null){switch(y.$$typeof){case sn:return d=Zn(y.type,y.key,y.props,null,v.mode,d),ga(d,y),d.return=v,d;case Ea:return y=of(y,v.mode,d),y.return=v,y;case Mt:return y=lu(y),s(v,y,d)}if(Ta(y)||ha(y))return y=au(y,v.mode,d,null),y.return=v,y;if(typeof y.then=="function")return s(v,Dn(y),d);if(y.$$typeof===yt)return s(v,Mn(v,y),d);Un(v,y)}return null}function h(v,y,d,o){var T=y!==null?y.key:null;if(typeof d=="string"&&d!==""||typeof d=="number"||typeof d=="bigint")return T!==null?null:c(v,y,""+d,o);if(typeof d=="object"&&d!==null){switch(d.$$typeof){case sn:return d.key===T?i(v,y,d,o):null;case Ea:return d.key===T?m(v,y,d,o):null;case Mt:return d=lu(d),h(v,y,d,o)}if(Ta(d)||ha(d))return T!==null?null:g(v,y,d,o,null);if(typeof d.then=="function")return h(v,y,Dn(d),o);if(d.$$typeof===yt)return h(v,y,Mn(v,d),o);Un(v,d)}return null}function S(v,y,d,o,T){if(typeof o=="string"&&o!==""||typeof o=="number"||typeof o=="bigint")return v=v.get(d)||null,c(y,v,""+o,T);if(typeof o=="object"&&o!==null){switch(o.$$typeof){case sn:return v=v.get(o.key===null?d:o.key)||null,i(y,v,o,T);case Ea:return v=v.get(o.key===null?d:o.key)||null,m(y,v,o,T);case Mt:return o=lu(o),S(v,y,d,o,T)}if(Ta(o)||ha(o))return v=v.get(d)||null,g(y,v,o,T,null);if(typeof o.then=="function")return S(v,y,d,Dn(o),T);if(o.$$typeof===yt)return S(v,y,d,Mn(y,o),T);Un(y,o)}return null}function z(v,y,d,o){for(var T=null,R=null,E=y,D=y=0,N=null;E!==null&&D<d.length;D++){E.index>D?(N=E,E=null):N=E.sibling;var B=h(v,E,d[D],o);if(B===null){E===null&&(E=N);break}l&&E&&B.alternate===null&&t(v,E),y=e(B,y,D),R===null?T=B:R.sibling=B,R=B,E=N}if(D===d.length)return u(v,E),q&&ct(v,D),T;if(E===null){for(;D<d.length;D++)E=s(v,d[D],o),E!==null&&(y=e(E,y,D),R===null?T=E:R.sibling=E,R=E);return q&&ct(v,D),T}for(E=a(E);D<d.length;D++)N=S(E,v,D,d[D],o),N!==null&&(l&&N.alternate!==null&&E.delete(N.key===null?D:N.key),y=e(N,y,D),R===null?T=N:R.sibling=N,R=N);return l&&E.forEach(function(Tt){return t(v,Tt)}),q&&ct(v,D),T}function A(v,y,d,o){if(d==null)throw Error(b(151));for(var T=null,R=null,E=y,D=y=0,N=null,B=d.next();E!==null&&!B.done;D++,B=d.next()){E.index>D?(N=E,E=null):N=E.sibling;var Tt=h(v,E,B.value,o);if(Tt===null){E===null&&(E=N);break}l&&E&&Tt.alternate===null&&t(v,E),y=e(Tt,y,D),R===null?T=Tt:R.sibling=Tt,R=Tt,E=N}if(B.done)return u(v,E),q&&ct(v,D),T;if(E===null){for(;!B.done;D++,B=d.next())B=s(v,B.value,o),B!==null&&(y=e(B,y,D),R===null?T=B:R.sibling=B,R=B);return q&&ct(v,D),T}for(E=a(E);!B.done;D++,B=d.next())B=S(E,v,D,B.value,o),B!==null&&(l&&B.alternate!==null&&E.delete(B.key===null?D:B.key),y=e(B,y,D),R===null?T=B:R.sibling=B,R=B);return l&&E.forEach(function(Am){return t(v,Am)}),q&&ct(v,D),T}function Q(v,y,d,o){if(typeof d=="object"&&d!==null&&d.type===Du&&d.key===null&&(d=d.props.children),typeof d=="object"&&d!==null){switch(d.$$typeof){case sn:l:{for(var T=d.key;y!==null;){if(y.key===T){if(T=d.type,T===Du){if(y.tag===7){u(v,y.sibling),o=n(y,d.props.children),o.return=v,v=o;break l}}else if(y.elementType===T||typeof T=="object"&&T!==null&&T.$$typeof===Mt&&lu(T)===y.type){u(v,y.sibling),o=n(y,d.props),ga(o,d),o.return=v,v=o;break l}u(v,y);break}else t(v,y);y=y.sibling}d.type===Du?(o=au(d.props.children,v.mode,o,d.key),o.return=v,v=o):(o=Zn(d.type,d.key,d.props,null,v.mode,o),ga(o,d),o.return=v,v=o)}return f(v);case Ea:l:{for(T=d.key;y!==null;){if(y.key===T)if(y.tag===4&&y.stateNode.containerInfo===d.containerInfo&&y.stateNode.implementation===d.implementation){u(v,y.sibling),o=n(y,d.children||[]),o.return=v,v=o;break l}else{u(v,y);break}else t(v,y);y=y.sibling}o=of(d,v.mode,o),o.return=v,v=o}return f(v);case Mt:return d=lu(d),Q(v,y,d,o)}if(Ta(d))return z(v,y,d,o);if(ha(d)){if(T=ha(d),typeof T!="function")throw Error(b(150));return d=T.call(d),A(v,y,d,o)}if(typeof d.then=="function")return Q(v,y,Dn(d),o);if(d.$$typeof===yt)return Q(v,y,Mn(v,d),o);Un(v,d)}return typeof d=="string"&&d!==""||typeof d=="number"||typeof d=="bigint"?(d=""+d,y!==null&&y.tag===6?(u(v,y.sibling),o=n(y,d),o.return=v,v=o):(u(v,y),o=gf(d,v.mode,o),o.return=v,v=o),f(v)):u(v,y)}return function(v,y,d,o){try{Ka=0;var T=Q(v,y,d,o);return xu=null,T}catch(E){if(E===ea||E===qe)throw E;var R=Dl(29,E,null,v.mode);return R.lanes=o,R.return=v,R}}}var yu=Oy(!0),_y=Oy(!1),Dt=!1;function Ic(l){l.updateQueue={baseState:l.memoizedState,firstBaseUpdate:null,lastBaseUpdate:null,shared:{pending:null,lanes:0,hiddenCallbacks:null},callbacks:null}}function ec(l,t){l=l.updateQueue,t.updateQueue===l&&(t.updateQueue={baseState:l.baseState,firstBaseUpdate:l.firstBaseUpdate,lastBaseUpdate:l.lastBaseUpdate,shared:l.shared,callbacks:null})}function Qt(l){return{lane:l,tag:0,payload:null,callback:null,next:null}}function Zt(l,t,u){var a=l.updateQueue;if(a===null)return null;if(a=a.shared,(Y&2)!==0){var n=a.pending;return n===null?t.next=t:(t.next=n.next,n.next=t),a.pending=t,t=ue(l),gy(l,null,u),t}return pe(l,a,t,u),ue(l)}function Na(l,t,u){if(t=t.updateQueue,t!==null&&(t=t.shared,(u&4194048)!==0)){var a=t.lanes;a&=l.pendingLanes,u|=a,t.lanes=u,x1(l,u)}}function bf(l,t){var u=l.updateQueue,a=l.alternate;if(a!==null&&(a=a.updateQueue,u===a)){var n=null,e=null;if(u=u.firstBaseUpdate,u!==null){do{var f={lane:u.lane,tag:u.tag,payload:u.payload,callback:null,next:null};e===null?n=e=f:e=e.next=f,u=u.next}while(u!==null);e===null?n=e=t:e=e.next=t}else n=e=t;u={baseState:a.baseState,firstBaseUpdate:n,lastBaseUpdate:e,shared:a.shared,callbacks:a.callbacks},l.updateQueue=u;return}l=u.lastBaseUpdate,l===null?u.firstBaseUpdate=t:l.next=t,u.lastBaseUpdate=t}var fc=!1;function pa(){if(fc){var l=Vu;if(l!==null)throw l}}function qa(l,t,u,a){fc=!1;var n=l.updateQueue;Dt=!1;var e=n.firstBaseUpdate,f=n.lastBaseUpdate,c=n.shared.pending;if(c!==null){n.shared.pending=null;var i=c,m=i.next;i.next=null,f===null?e=m:f.next=m,f=i;var g=l.alternate;g!==null&&(g=g.updateQueue,c=g.lastBaseUpdate,c!==f&&(c===null?g.firstBaseUpdate=m:c.next=m,g.lastBaseUpdate=i))}if(e!==null){var s=n.baseState;f=0,g=m=i=null,c=e;do{var h=c.lane&-536870913,S=h!==c.lane;if(S?(p&h)===h:(a&h)===h){h!==0&&h===Wu&&(fc=!0),g!==null&&(g=g.next={lane:0,tag:c.tag,payload:c.payload,callback:null,next:null});l:{var z=l,A=c;h=t;var Q=u;switch(A.tag){case 1:if(z=A.payload,typeof z=="function"){s=z.call(Q,s,h);break l}s=z;break l;case 3:z.flags=z.flags&-65537|128;case 0:if(z=A.payload,h=typeof z=="function"?z.call(Q,s,h):z,h==null)break l;s=r({},s,h);break l;case 2:Dt=!0}}h=c.callback,h!==null&&(l.flags|=64,S&&(l.flags|=8192),S=n.callbacks,S===null?n.callbacks=[h]:S.push(h))}else S={lane:h,tag:c.tag,payload:c.payload,callback:c.callback,next:null},g===null?(m=g=S,i=s):g=g.next=S,f|=h;if(c=c.next,c===null){if(c=n.shared.pending,c===null)break;S=c,c=S.next,S.next=null,n.lastBaseUpdate=S,n.shared.pending=null}}while(!0);g===null&&(i=s),n.baseState=i,n.firstBaseUpdate=m,n.lastBaseUpdate=g,e===null&&(n.shared.lanes=0),Wt|=f,l.lanes=f,l.memoizedState=s}}function My(l,t){if(typeof l!="function")throw Error(b(191,l));l.call(t)}function Dy(l,t){var u=l.callbacks;if(u!==null)for(l.callbacks=null,l=0;l<u.length;l++)My(u[l],t)}var $u=Pl(null),fe=Pl(0);function C0(l,t){l=zt,x(fe,l),x($u,t),zt=l|t.baseLanes}function cc(){x(fe,zt),x($u,$u.current)}function Pc(){zt=fe.current,cl($u),cl(fe)}var Bl=Pl(null),xl=null;function Ht(l){var t=l.alternate;x(k,k.current&1),x(Bl,l),xl===null&&(t===null||$u.current!==null||t.memoizedState!==null)&&(xl=l)}function ic(l){x(k,k.current),x(Bl,l),xl===null&&(xl=l)}function Uy(l){l.tag===22?(x(k,k.current),x(Bl,l),xl===null&&(xl=l)):Nt(l)}function Nt(){x(k,k.current),x(Bl,Bl.current)}function Ml(l){cl(Bl),xl===l&&(xl=null),cl(k)}var k=Pl(0);function ce(l){for(var t=l;t!==null;){if(t.tag===13){var u=t.memoizedState;if(u!==null&&(u=u.dehydrated,u===null||Uc(u)||Hc(u)))return t}else if(t.tag===19&&(t.memoizedProps.revealOrder==="forwards"||t.memoizedProps.revealOrder==="backwards"||t.memoizedProps.revealOrder==="unstable_legacy-backwards"||t.memoizedProps.revealOrder==="together")){if((t.flags&128)!==0)return t}else if(t.child!==null){t.child.return=t,t=t.child;continue}if(t===l)break;for(;t.sibling===null;){if(t.return===null||t.return===l)return null;t=t.return}t.sibling.return=t.return,t=t.sibling}return null}var ot=0,M=null,j=null,P=null,ie=!1,Lu=!1,vu=!1,ye=0,Ja=0,Ku=null,dh=0;function $(){throw Error(b(321))}function li(l,t){if(t===null)return!1;for(var u=0;u<t.length&&u<l.length;u++)if(!Rl(l[u],t[u]))return!1;return!0}function ti(l,t,u,a,n,e){return ot=e,M=t,t.memoizedState=null,t.updateQueue=null,t.lanes=0,O.H=l===null||l.memoizedState===null?nv:di,vu=!1,e=u(a,n),vu=!1,Lu&&(e=Ny(t,u,a,n)),Hy(l),e}function Hy(l){O.H=ra;var t=j!==null&&j.next!==null;if(ot=0,P=j=M=null,ie=!1,Ja=0,Ku=null,t)throw Error(b(300));l===null||ul||(l=l.dependencies,l!==null&&ne(l)&&(ul=!0))}function Ny(l,t,u,a){M=l;var n=0;do{if(Lu&&(Ku=null),Ja=0,Lu=!1,25<=n)throw Error(b(301));if(n+=1,P=j=null,l.updateQueue!=null){var e=l.updateQueue;e.lastEffect=null,e.events=null,e.stores=null,e.memoCache!=null&&(e.memoCache.index=0)}O.H=ev,e=t(u,a)}while(Lu);return e}function hh(){var l=O.H,t=l.useState()[0];return t=typeof t.then=="function"?en(t):t,l=l.useState()[0],(j!==null?j.memoizedState:null)!==l&&(M.flags|=1024),t}function ui(){var l=ye!==0;return ye=0,l}function ai(l,t,u){t.updateQueue=l.updateQueue,t.flags&=-2053,l.lanes&=~u}function ni(l){if(ie){for(l=l.memoizedState;l!==null;){var t=l.queue;t!==null&&(t.pending=null),l=l.next}ie=!1}ot=0,P=j=M=null,Lu=!1,Ja=ye=0,Ku=null}function ol(){var l={memoizedState:null,baseState:null,baseQueue:null,queue:null,next:null};return P===null?M.memoizedState=P=l:P=P.next=l,P}function I(){if(j===null){var l=M.alternate;l=l!==null?l.memoizedState:null}else l=j.next;var t=P===null?M.memoizedState:P.next;if(t!==null)P=t,j=l;else{if(l===null)throw M.alternate===null?Error(b(467)):Error(b(310));j=l,l={memoizedState:j.memoizedState,baseState:j.baseState,baseQueue:j.baseQueue,queue:j.queue,next:null},P===null?M.memoizedState=P=l:P=P.next=l}return P}function Re(){return{lastEffect:null,events:null,stores:null,memoCache:null}}function en(l){var t=Ja;return Ja+=1,Ku===null&&(Ku=[]),l=Ay(Ku,l,t),t=M,(P===null?t.memoizedState:P.next)===null&&(t=t.alternate,O.H=t===null||t.memoizedState===null?nv:di),l}function Be(l){if(l!==null&&typeof l=="object"){if(typeof l.then=="function")return en(l);if(l.$$typeof===yt)return ml(l)}throw Error(b(438,String(l)))}function ei(l){var t=null,u=M.updateQueue;if(u!==null&&(t=u.memoCache),t==null){var a=M.alternate;a!==null&&(a=a.updateQueue,a!==null&&(a=a.memoCache,a!=null&&(t={data:a.data.map(function(n){return n.slice()}),index:0})))}if(t==null&&(t={data:[],index:0}),u===null&&(u=Re(),M.updateQueue=u),u.memoCache=t,u=t.data[t.index],u===void 0)for(u=t.data[t.index]=Array(l),a=0;a<l;a++)u[a]=Im;return t.index++,u}function st(l,t){return typeof t=="function"?t(l):t}function Vn(l){var t=I();return fi(t,j,l)}function fi(l,t,u){var a=l.queue;if(a===null)throw Error(b(311));a.lastRenderedReducer=u;var n=l.baseQueue,e=a.pending;if(e!==null){if(n!==null){var f=n.next;n.next=e.next,e.next=f}t.baseQueue=n=e,a.pending=null}if(e=l.baseState,n===null)l.memoizedState=e;else{t=n.next;var c=f=null,i=null,m=t,g=!1;do{var s=m.lane&-536870913;if(s!==m.lane?(p&s)===s:(ot&s)===s){var h=m.revertLane;if(h===0)i!==null&&(i=i.next={lane:0,revertLane:0,gesture:null,action:m.action,hasEagerState:m.hasEagerState,eagerState:m.eagerState,next:null}),s===Wu&&(g=!0);else if((ot&h)===h){m=m.next,h===Wu&&(g=!0);continue}else s={lane:0,revertLane:m.revertLane,gesture:null,action:m.action,hasEagerState:m.hasEagerState,eagerState:m.eagerState,next:null},i===null?(c=i=s,f=e):i=i.next=s,M.lanes|=h,Wt|=h;s=m.action,vu&&u(e,s),e=m.hasEagerState?m.eagerState:u(e,s)}else h={lane:s,revertLane:m.revertLane,gesture:m.gesture,action:m.action,hasEagerState:m.hasEagerState,eagerState:m.eagerState,next:null},i===null?(c=i=h,f=e):i=i.next=h,M.lanes|=s,Wt|=s;m=m.next}while(m!==null&&m!==t);if(i===null?f=e:i.next=c,!Rl(e,l.memoizedState)&&(ul=!0,g&&(u=Vu,u!==null)))throw u;l.memoizedState=e,l.baseState=f,l.baseQueue=i,a.lastRenderedState=e}return n===null&&(a.lanes=0),[l.memoizedState,a.dispatch]}function zf(l){var t=I(),u=t.queue;if(u===null)throw Error(b(311));u.lastRenderedReducer=l;var a=u.dispatch,n=u.pending,e=t.memoizedState;if(n!==null){u.pending=null;var f=n=n.next;do e=l(e,f.action),f=f.next;while(f!==n);Rl(e,t.memoizedState)||(ul=!0),t.memoizedState=e,t.baseQueue===null&&(t.baseState=e),u.lastRenderedState=e}return[e,a]}function py(l,t,u){var a=M,n=I(),e=q;if(e){if(u===void 0)throw Error(b(407));u=u()}else u=t();var f=!Rl((j||n).memoizedState,u);if(f&&(n.memoizedState=u,ul=!0),n=n.queue,ci(By.bind(null,a,n,l),[l]),n.getSnapshot!==t||f||P!==null&&P.memoizedState.tag&1){if(a.flags|=2048,Fu(9,{destroy:void 0},Ry.bind(null,a,n,u,t),null),V===null)throw Error(b(349));e||(ot&127)!==0||qy(a,t,u)}return u}function qy(l,t,u){l.flags|=16384,l={getSnapshot:t,value:u},t=M.updateQueue,t===null?(t=Re(),M.updateQueue=t,t.stores=[l]):(u=t.stores,u===null?t.stores=[l]:u.push(l))}function Ry(l,t,u,a){t.value=u,t.getSnapshot=a,Yy(t)&&Cy(l)}function By(l,t,u){return u(function(){Yy(t)&&Cy(l)})}function Yy(l){var t=l.getSnapshot;l=l.value;try{var u=t();return!Rl(l,u)}catch{return!0}}function Cy(l){var t=gu(l,2);t!==null&&Tl(t,l,2)}function yc(l){var t=ol();if(typeof l=="function"){var u=l;if(l=u(),vu){qt(!0);try{u()}finally{qt(!1)}}}return t.memoizedState=t.baseState=l,t.queue={pending:null,lanes:0,dispatch:null,lastRenderedReducer:st,lastRenderedState:l},t}function Gy(l,t,u,a){return l.baseState=u,fi(l,j,typeof a=="function"?a:st)}function Sh(l,t,u,a,n){if(Ce(l))throw Error(b(485));if(l=t.action,l!==null){var e={payload:n,action:l,next:null,isTransition:!0,status:"pending",value:null,reason:null,listeners:[],then:function(f){e.listeners.push(f)}};O.T!==null?u(!0):e.isTransition=!1,a(e),u=t.pending,u===null?(e.next=t.pending=e,Xy(t,e)):(e.next=u.next,t.pending=u.next=e)}}function Xy(l,t){var u=t.action,a=t.payload,n=l.state;if(t.isTransition){var e=O.T,f={};O.T=f;try{var c=u(n,a),i=O.S;i!==null&&i(f,c),G0(l,t,c)}catch(m){vc(l,t,m)}finally{e!==null&&f.types!==null&&(e.types=f.types),O.T=e}}else try{e=u(n,a),G0(l,t,e)}catch(m){vc(l,t,m)}}function G0(l,t,u){u!==null&&typeof u=="object"&&typeof u.then=="function"?u.then(function(a){X0(l,t,a)},function(a){return vc(l,t,a)}):X0(l,t,u)}function X0(l,t,u){t.status="fulfilled",t.value=u,Qy(t),l.state=u,t=l.pending,t!==null&&(u=t.next,u===t?l.pending=null:(u=u.next,t.next=u,Xy(l,u)))}function vc(l,t,u){var a=l.pending;if(l.pending=null,a!==null){a=a.next;do t.status="rejected",t.reason=u,Qy(t),t=t.next;while(t!==a)}l.action=null}function Qy(l){l=l.listeners;for(var t=0;t<l.length;t++)(0,l[t])()}function Zy(l,t){return t}function Q0(l,t){if(q){var u=V.formState;if(u!==null){l:{var a=M;if(q){if(J){t:{for(var n=J,e=Vl;n.nodeType!==8;){if(!e){n=null;break t}if(n=Ll(n.nextSibling),n===null){n=null;break t}}e=n.data,n=e==="F!"||e==="F"?n:null}if(n){J=Ll(n.nextSibling),a=n.data==="F!";break l}}rt(a)}a=!1}a&&(t=u[0])}}return u=ol(),u.memoizedState=u.baseState=t,a={pending:null,lanes:0,dispatch:null,lastRenderedReducer:Zy,lastRenderedState:t},u.queue=a,u=tv.bind(null,M,a),a.dispatch=u,a=yc(!1),e=mi.bind(null,M,!1,a.queue),a=ol(),n={state:t,dispatch:null,action:l,pending:null},a.queue=n,u=Sh.bind(null,M,n,e,u),n.dispatch=u,a.memoizedState=l,[t,u,!1]}function Z0(l){var t=I();return jy(t,j,l)}function jy(l,t,u){if(t=fi(l,t,Zy)[0],l=Vn(st)[0],typeof t=="object"&&t!==null&&typeof t.then=="function")try{var a=en(t)}catch(f){throw f===ea?qe:f}else a=t;t=I();var n=t.queue,e=n.dispatch;return u!==t.memoizedState&&(M.flags|=2048,Fu(9,{destroy:void 0},gh.bind(null,n,u),null)),[a,e,l]}function gh(l,t){l.action=t}function j0(l){var t=I(),u=j;if(u!==null)return jy(t,u,l);I(),t=t.memoizedState,u=I();var a=u.queue.dispatch;return u.memoizedState=l,[t,a,!1]}function Fu(l,t,u,a){return l={tag:l,create:u,deps:a,inst:t,next:null},t=M.updateQueue,t===null&&(t=Re(),M.updateQueue=t),u=t.lastEffect,u===null?t.lastEffect=l.next=l:(a=u.next,u.next=l,l.next=a,t.lastEffect=l),l}function Vy(){return I().memoizedState}function xn(l,t,u,a){var n=ol();M.flags|=l,n.memoizedState=Fu(1|t,{destroy:void 0},u,a===void 0?null:a)}function Ye(l,t,u,a){var n=I();a=a===void 0?null:a;var e=n.memoizedState.inst;j!==null&&a!==null&&li(a,j.memoizedState.deps)?n.memoizedState=Fu(t,e,u,a):(M.flags|=l,n.memoizedState=Fu(1|t,e,u,a))}function V0(l,t){xn(8390656,8,l,t)}function ci(l,t){Ye(2048,8,l,t)}function oh(l){M.flags|=4;var t=M.updateQueue;if(t===null)t=Re(),M.updateQueue=t,t.events=[l];else{var u=t.events;u===null?t.events=[l]:u.push(l)}}function xy(l){var t=I().memoizedState;return oh({ref:t,nextImpl:l}),function(){if((Y&2)!==0)throw Error(b(440));return t.impl.apply(void 0,arguments)}}function Ly(l,t){return Ye(4,2,l,t)}function Ky(l,t){return Ye(4,4,l,t)}function Jy(l,t){if(typeof t=="function"){l=l();var u=t(l);return function(){typeof u=="function"?u():t(null)}}if(t!=null)return l=l(),t.current=l,function(){t.current=null}}function ry(l,t,u){u=u!=null?u.concat([l]):null,Ye(4,4,Jy.bind(null,t,l),u)}function ii(){}function wy(l,t){var u=I();t=t===void 0?null:t;var a=u.memoizedState;return t!==null&&li(t,a[1])?a[0]:(u.memoizedState=[l,t],l)}function Wy(l,t){var u=I();t=t===void 0?null:t;var a=u.memoizedState;if(t!==null&&li(t,a[1]))return a[0];if(a=l(),vu){qt(!0);try{l()}finally{qt(!1)}}return u.memoizedState=[a,t],a}function yi(l,t,u){return u===void 0||(ot&1073741824)!==0&&(p&261930)===0?l.memoizedState=t:(l.memoizedState=u,l=Gv(),M.lanes|=l,Wt|=l,u)}function $y(l,t,u,a){return Rl(u,t)?u:$u.current!==null?(l=yi(l,u,a),Rl(l,t)||(ul=!0),l):(ot&42)===0||(ot&1073741824)!==0&&(p&261930)===0?(ul=!0,l.memoizedState=u):(l=Gv(),M.lanes|=l,Wt|=l,t)}function Fy(l,t,u,a,n){var e=C.p;C.p=e!==0&&8>e?e:8;var f=O.T,c={};O.T=c,mi(l,!1,t,u);try{var i=n(),m=O.S;if(m!==null&&m(c,i),i!==null&&typeof i=="object"&&typeof i.then=="function"){var g=mh(i,a);Ra(l,t,g,ql(l))}else Ra(l,t,a,ql(l))}catch(s){Ra(l,t,{then:function(){},status:"rejected",reason:s},ql())}finally{C.p=e,f!==null&&c.types!==null&&(f.types=c.types),O.T=f}}function sh(){}function mc(l,t,u,a){if(l.tag!==5)throw Error(b(476));var n=ky(l).queue;Fy(l,n,t,uu,u===null?sh:function(){return Iy(l),u(a)})}function ky(l){var t=l.memoizedState;if(t!==null)return t;t={memoizedState:uu,baseState:uu,baseQueue:null,queue:{pending:null,lanes:0,dispatch:null,lastRenderedReducer:st,lastRenderedState:uu},next:null};var u={};return t.next={memoizedState:u,baseState:u,baseQueue:null,queue:{pending:null,lanes:0,dispatch:null,lastRenderedReducer:st,lastRenderedState:u},next:null},l.memoizedState=t,l=l.alternate,l!==null&&(l.memoizedState=t),t}function Iy(l){var t=ky(l);t.next===null&&(t=l.alternate.memoizedState),Ra(l,t.next.queue,{},ql())}function vi(){return ml($a)}function Py(){return I().memoizedState}function lv(){return I().memoizedState}function bh(l){for(var t=l.return;t!==null;){switch(t.tag){case 24:case 3:var u=ql();l=Qt(u);var a=Zt(t,l,u);a!==null&&(Tl(a,t,u),Na(a,t,u)),t={cache:$c()},l.payload=t;return}t=t.return}}function zh(l,t,u){var a=ql();u={lane:a,revertLane:0,gesture:null,action:u,hasEagerState:!1,eagerState:null,next:null},Ce(l)?uv(t,u):(u=Jc(l,t,u,a),u!==null&&(Tl(u,l,a),av(u,t,a)))}function tv(l,t,u){var a=ql();Ra(l,t,u,a)}function Ra(l,t,u,a){var n={lane:a,revertLane:0,gesture:null,action:u,hasEagerState:!1,eagerState:null,next:null};if(Ce(l))uv(t,n);else{var e=l.alternate;if(l.lanes===0&&(e===null||e.lanes===0)&&(e=t.lastRenderedReducer,e!==null))try{var f=t.lastRenderedState,c=e(f,u);if(n.hasEagerState=!0,n.eagerState=c,Rl(c,f))return pe(l,t,n,0),V===null&&Ne(),!1}catch{}if(u=Jc(l,t,n,a),u!==null)return Tl(u,l,a),av(u,t,a),!0}return!1}function mi(l,t,u,a){if(a={lane:2,revertLane:Ei(),gesture:null,action:a,hasEagerState:!1,eagerState:null,next:null},Ce(l)){if(t)throw Error(b(479))}else t=Jc(l,u,a,2),t!==null&&Tl(t,l,2)}function Ce(l){var t=l.alternate;return l===M||t!==null&&t===M}function uv(l,t){Lu=ie=!0;var u=l.pending;u===null?t.next=t:(t.next=u.next,u.next=t),l.pending=t}function av(l,t,u){if((u&4194048)!==0){var a=t.lanes;a&=l.pendingLanes,u|=a,t.lanes=u,x1(l,u)}}var ra={readContext:ml,use:Be,useCallback:$,useContext:$,useEffect:$,useImperativeHandle:$,useLayoutEffect:$,useInsertionEffect:$,useMemo:$,useReducer:$,useRef:$,useState:$,useDebugValue:$,useDeferredValue:$,useTransition:$,useSyncExternalStore:$,useId:$,useHostTransitionStatus:$,useFormState:$,useActionState:$,useOptimistic:$,useMemoCache:$,useCacheRefresh:$};ra.useEffectEvent=$;var nv={readContext:ml,use:Be,useCallback:function(l,t){return ol().memoizedState=[l,t===void 0?null:t],l},useContext:ml,useEffect:V0,useImperativeHandle:function(l,t,u){u=u!=null?u.concat([l]):null,xn(4194308,4,Jy.bind(null,t,l),u)},useLayoutEffect:function(l,t){return xn(4194308,4,l,t)},useInsertionEffect:function(l,t){xn(4,2,l,t)},useMemo:function(l,t){var u=ol();t=t===void 0?null:t;var a=l();if(vu){qt(!0);try{l()}finally{qt(!1)}}return u.memoizedState=[a,t],a},useReducer:function(l,t,u){var a=ol();if(u!==void 0){var n=u(t);if(vu){qt(!0);try{u(t)}finally{qt(!1)}}}else n=t;return a.memoizedState=a.baseState=n,l={pending:null,lanes:0,dispatch:null,lastRenderedReducer:l,lastRenderedState:n},a.queue=l,l=l.dispatch=zh.bind(null,M,l),[a.memoizedState,l]},useRef:function(l){var t=ol();return l={current:l},t.memoizedState=l},useState:function(l){l=yc(l);var t=l.queue,u=tv.bind(null,M,t);return t.dispatch=u,[l.memoizedState,u]},useDebugValue:ii,useDeferredValue:function(l,t){var u=ol();return yi(u,l,t)},useTransition:function(){var l=yc(!1);return l=Fy.bind(null,M,l.queue,!0,!1),ol().memoizedState=l,[!1,l]},useSyncExternalStore:function(l,t,u){var a=M,n=ol();if(q){if(u===void 0)throw Error(b(407));u=u()}else{if(u=t(),V===null)throw Error(b(349));(p&127)!==0||qy(a,t,u)}n.memoizedState=u;var e={value:u,getSnapshot:t};return n.queue=e,V0(By.bind(null,a,e,l),[l]),a.flags|=2048,Fu(9,{destroy:void 0},Ry.bind(null,a,e,u,t),null),u},useId:function(){var l=ol(),t=V.identifierPrefix;if(q){var u=Fl,a=$l;u=(a&~(1<<32-pl(a)-1)).toString(32)+u,t="_"+t+"R_"+u,u=ye++,0<u&&(t+="H"+u.toString(32)),t+="_"}else u=dh++,t="_"+t+"r_"+u.toString(32)+"_";return l.memoizedState=t},useHostTransitionStatus:vi,useFormState:Q0,useActionState:Q0,useOptimistic:function(l){var t=ol();t.memoizedState=t.baseState=l;var u={pending:null,lanes:0,dispatch:null,lastRenderedReducer:null,lastRenderedState:null};return t.queue=u,t=mi.bind(null,M,!0,u),u.dispatch=t,[l,t]},useMemoCache:ei,useCacheRefresh:function(){return ol().memoizedState=bh.bind(null,M)},useEffectEvent:function(l){var t=ol(),u={impl:l};return t.memoizedState=u,function(){if((Y&2)!==0)throw Error(b(440));return u.impl.apply(void 0,arguments)}}},di={readContext:ml,use:Be,useCallback:wy,useContext:ml,useEffect:ci,useImperativeHandle:ry,useInsertionEffect:Ly,useLayoutEffect:Ky,useMemo:Wy,useReducer:Vn,useRef:Vy,useState:function(){return Vn(st)},useDebugValue:ii,useDeferredValue:function(l,t){var u=I();return $y(u,j.memoizedState,l,t)},useTransition:function(){var l=Vn(st)[0],t=I().memoizedState;return[typeof l=="boolean"?l:en(l),t]},useSyncExternalStore:py,useId:Py,useHostTransitionStatus:vi,useFormState:Z0,useActionState:Z0,useOptimistic:function(l,t){var u=I();return Gy(u,j,l,t)},useMemoCache:ei,useCacheRefresh:lv};di.useEffectEvent=xy;var ev={readContext:ml,use:Be,useCallback:wy,useContext:ml,useEffect:ci,useImperativeHandle:ry,useInsertionEffect:Ly,useLayoutEffect:Ky,useMemo:Wy,useReducer:zf,useRef:Vy,useState:function(){return zf(st)},useDebugValue:ii,useDeferredValue:function(l,t){var u=I();return j===null?yi(u,l,t):$y(u,j.memoizedState,l,t)},useTransition:function(){var l=zf(st)[0],t=I().memoizedState;return[typeof l=="boolean"?l:en(l),t]},useSyncExternalStore:py,useId:Py,useHostTransitionStatus:vi,useFormState:j0,useActionState:j0,useOptimistic:function(l,t){var u=I();return j!==null?Gy(u,j,l,t):(u.baseState=l,[l,u.queue.dispatch])},useMemoCache:ei,useCacheRefresh:lv};ev.useEffectEvent=xy;function Ef(l,t,u,a){t=l.memoizedState,u=u(a,t),u=u==null?t:r({},t,u),l.memoizedState=u,l.lanes===0&&(l.updateQueue.baseState=u)}var dc={enqueueSetState:function(l,t,u){l=l._reactInternals;var a=ql(),n=Qt(a);n.payload=t,u!=null&&(n.callback=u),t=Zt(l,n,a),t!==null&&(Tl(t,l,a),Na(t,l,a))},enqueueReplaceState:function(l,t,u){l=l._reactInternals;var a=ql(),n=Qt(a);n.tag=1,n.payload=t,u!=null&&(n.callback=u),t=Zt(l,n,a),t!==null&&(Tl(t,l,a),Na(t,l,a))},enqueueForceUpdate:function(l,t){l=l._reactInternals;var u=ql(),a=Qt(u);a.tag=2,t!=null&&(a.callback=t),t=Zt(l,a,u),t!==null&&(Tl(t,l,u),Na(t,l,u))}};function x0(l,t,u,a,n,e,f){return l=l.stateNode,typeof l.shouldComponentUpdate=="function"?l.shouldComponentUpdate(a,e,f):t.prototype&&t.prototype.isPureReactComponent?!Va(u,a)||!Va(n,e):!0}function L0(l,t,u,a){l=t.state,typeof t.componentWillReceiveProps=="function"&&t.componentWillReceiveProps(u,a),typeof t.UNSAFE_componentWillReceiveProps=="function"&&t.UNSAFE_componentWillReceiveProps(u,a),t.state!==l&&dc.enqueueReplaceState(t,t.state,null)}function mu(l,t){var u=t;if("ref"in t){u={};for(var a in t)a!=="ref"&&(u[a]=t[a])}if(l=l.defaultProps){u===t&&(u=r({},u));for(var n in l)u[n]===void 0&&(u[n]=l[n])}return u}function fv(l){te(l)}function cv(l){console.error(l)}function iv(l){te(l)}function ve(l,t){try{var u=l.onUncaughtError;u(t.value,{componentStack:t.stack})}catch(a){setTimeout(function(){throw a})}}function K0(l,t,u){try{var a=l.onCaughtError;a(u.value,{componentStack:u.stack,errorBoundary:t.tag===1?t.stateNode:null})}catch(n){setTimeout(function(){throw n})}}function hc(l,t,u){return u=Qt(u),u.tag=3,u.payload={element:null},u.callback=function(){ve(l,t)},u}function yv(l){return l=Qt(l),l.tag=3,l}function vv(l,t,u,a){var n=u.type.getDerivedStateFromError;if(typeof n=="function"){var e=a.value;l.payload=function(){return n(e)},l.callback=function(){K0(t,u,a)}}var f=u.stateNode;f!==null&&typeof f.componentDidCatch=="function"&&(l.callback=function(){K0(t,u,a),typeof n!="function"&&(jt===null?jt=new Set([this]):jt.add(this));var c=a.stack;this.componentDidCatch(a.value,{componentStack:c!==null?c:""})})}function Eh(l,t,u,a,n){if(u.flags|=32768,a!==null&&typeof a=="object"&&typeof a.then=="function"){if(t=u.alternate,t!==null&&na(t,u,n,!0),u=Bl.current,u!==null){switch(u.tag){case 31:case 13:return xl===null?ge():u.alternate===null&&F===0&&(F=3),u.flags&=-257,u.flags|=65536,u.lanes=n,a===ee?u.flags|=16384:(t=u.updateQueue,t===null?u.updateQueue=new Set([a]):t.add(a),qf(l,a,n)),!1;case 22:return u.flags|=65536,a===ee?u.flags|=16384:(t=u.updateQueue,t===null?(t={transitions:null,markerInstances:null,retryQueue:new Set([a])},u.updateQueue=t):(u=t.retryQueue,u===null?t.retryQueue=new Set([a]):u.add(a)),qf(l,a,n)),!1}throw Error(b(435,u.tag))}return qf(l,a,n),ge(),!1}if(q)return t=Bl.current,t!==null?((t.flags&65536)===0&&(t.flags|=256),t.flags|=65536,t.lanes=n,a!==lc&&(l=Error(b(422),{cause:a}),La(jl(l,u)))):(a!==lc&&(t=Error(b(423),{cause:a}),La(jl(t,u))),l=l.current.alternate,l.flags|=65536,n&=-n,l.lanes|=n,a=jl(a,u),n=hc(l.stateNode,a,n),bf(l,n),F!==4&&(F=2)),!1;var e=Error(b(520),{cause:a});if(e=jl(e,u),Ca===null?Ca=[e]:Ca.push(e),F!==4&&(F=2),t===null)return!0;a=jl(a,u),u=t;do{switch(u.tag){case 3:return u.flags|=65536,l=n&-n,u.lanes|=l,l=hc(u.stateNode,a,l),bf(u,l),!1;case 1:if(t=u.type,e=u.stateNode,(u.flags&128)===0&&(typeof t.getDerivedStateFromError=="function"||e!==null&&typeof e.componentDidCatch=="function"&&(jt===null||!jt.has(e))))return u.flags|=65536,n&=-n,u.lanes|=n,n=yv(n),vv(n,l,u,a),bf(u,n),!1}u=u.return}while(u!==null);return!1}var hi=Error(b(461)),ul=!1;function il(l,t,u,a){t.child=l===null?_y(t,null,u,a):yu(t,l.child,u,a)}function J0(l,t,u,a,n){u=u.render;var e=t.ref;if("ref"in a){var f={};for(var c in a)c!=="ref"&&(f[c]=a[c])}else f=a;return iu(t),a=ti(l,t,u,f,e,n),c=ui(),l!==null&&!ul?(ai(l,t,n),bt(l,t,n)):(q&&c&&wc(t),t.flags|=1,il(l,t,a,n),t.child)}function r0(l,t,u,a,n){if(l===null){var e=u.type;return typeof e=="function"&&!rc(e)&&e.defaultProps===void 0&&u.compare===null?(t.tag=15,t.type=e,mv(l,t,e,a,n)):(l=Zn(u.type,null,a,t,t.mode,n),l.ref=t.ref,l.return=t,t.child=l)}if(e=l.child,!Si(l,n)){var f=e.memoizedProps;if(u=u.compare,u=u!==null?u:Va,u(f,a)&&l.ref===t.ref)return bt(l,t,n)}return t.flags|=1,l=dt(e,a),l.ref=t.ref,l.return=t,t.child=l}function mv(l,t,u,a,n){if(l!==null){var e=l.memoizedProps;if(Va(e,a)&&l.ref===t.ref)if(ul=!1,t.pendingProps=a=e,Si(l,n))(l.flags&131072)!==0&&(ul=!0);else return t.lanes=l.lanes,bt(l,t,n)}return Sc(l,t,u,a,n)}function dv(l,t,u,a){var n=a.children,e=l!==null?l.memoizedState:null;if(l===null&&t.stateNode===null&&(t.stateNode={_visibility:1,_pendingMarkers:null,_retryCache:null,_transitions:null}),a.mode==="hidden"){if((t.flags&128)!==0){if(e=e!==null?e.baseLanes|u:u,l!==null){for(a=t.child=l.child,n=0;a!==null;)n=n|a.lanes|a.childLanes,a=a.sibling;a=n&~e}else a=0,t.child=null;return w0(l,t,e,u,a)}if((u&536870912)!==0)t.memoizedState={baseLanes:0,cachePool:null},l!==null&&jn(t,e!==null?e.cachePool:null),e!==null?C0(t,e):cc(),Uy(t);else return a=t.lanes=536870912,w0(l,t,e!==null?e.baseLanes|u:u,u,a)}else e!==null?(jn(t,e.cachePool),C0(t,e),Nt(t),t.memoizedState=null):(l!==null&&jn(t,null),cc(),Nt(t));return il(l,t,n,u),t.child}function Oa(l,t){return l!==null&&l.tag===22||t.stateNode!==null||(t.stateNode={_visibility:1,_pendingMarkers:null,_retryCache:null,_transitions:null}),t.sibling}function w0(l,t,u,a,n){var e=Fc();return e=e===null?null:{parent:tl._currentValue,pool:e},t.memoizedState={baseLanes:u,cachePool:e},l!==null&&jn(t,null),cc(),Uy(t),l!==null&&na(l,t,a,!0),t.childLanes=n,null}function Ln(l,t){return t=me({mode:t.mode,children:t.children},l.mode),t.ref=l.ref,l.child=t,t.return=l,t}function W0(l,t,u){return yu(t,l.child,null,u),l=Ln(t,t.pendingProps),l.flags|=2,Ml(t),t.memoizedState=null,l}function Th(l,t,u){var a=t.pendingProps,n=(t.flags&128)!==0;if(t.flags&=-129,l===null){if(q){if(a.mode==="hidden")return l=Ln(t,a),t.lanes=536870912,Oa(null,l);if(ic(t),(l=J)?(l=nm(l,Vl),l=l!==null&&l.data==="&"?l:null,l!==null&&(t.memoizedState={dehydrated:l,treeContext:Jt!==null?{id:$l,overflow:Fl}:null,retryLane:536870912,hydrationErrors:null},u=sy(l),u.return=t,t.child=u,vl=t,J=null)):l=null,l===null)throw rt(t);return t.lanes=536870912,null}return Ln(t,a)}var e=l.memoizedState;if(e!==null){var f=e.dehydrated;if(ic(t),n)if(t.flags&256)t.flags&=-257,t=W0(l,t,u);else if(t.memoizedState!==null)t.child=l.child,t.flags|=128,t=null;else throw Error(b(558));else if(ul||na(l,t,u,!1),n=(u&l.childLanes)!==0,ul||n){if(a=V,a!==null&&(f=L1(a,u),f!==0&&f!==e.retryLane))throw e.retryLane=f,gu(l,f),Tl(a,l,f),hi;ge(),t=W0(l,t,u)}else l=e.treeContext,J=Ll(f.nextSibling),vl=t,q=!0,Xt=null,Vl=!1,l!==null&&zy(t,l),t=Ln(t,a),t.flags|=4096;return t}return l=dt(l.child,{mode:a.mode,children:a.children}),l.ref=t.ref,t.child=l,l.return=t,l}function Kn(l,t){var u=t.ref;if(u===null)l!==null&&l.ref!==null&&(t.flags|=4194816);else{if(typeof u!="function"&&typeof u!="object")throw Error(b(284));(l===null||l.ref!==u)&&(t.flags|=4194816)}}function Sc(l,t,u,a,n){return iu(t),u=ti(l,t,u,a,void 0,n),a=ui(),l!==null&&!ul?(ai(l,t,n),bt(l,t,n)):(q&&a&&wc(t),t.flags|=1,il(l,t,u,n),t.child)}function $0(l,t,u,a,n,e){return iu(t),t.updateQueue=null,u=Ny(t,a,u,n),Hy(l),a=ui(),l!==null&&!ul?(ai(l,t,e),bt(l,t,e)):(q&&a&&wc(t),t.flags|=1,il(l,t,u,e),t.child)}function F0(l,t,u,a,n){if(iu(t),t.stateNode===null){var e=Yu,f=u.contextType;typeof f=="object"&&f!==null&&(e=ml(f)),e=new u(a,e),t.memoizedState=e.state!==null&&e.state!==void 0?e.state:null,e.updater=dc,t.stateNode=e,e._reactInternals=t,e=t.stateNode,e.props=a,e.state=t.memoizedState,e.refs={},Ic(t),f=u.contextType,e.context=typeof f=="object"&&f!==null?ml(f):Yu,e.state=t.memoizedState,f=u.getDerivedStateFromProps,typeof f=="function"&&(Ef(t,u,f,a),e.state=t.memoizedState),typeof u.getDerivedStateFromProps=="function"||typeof e.getSnapshotBeforeUpdate=="function"||typeof e.UNSAFE_componentWillMount!="function"&&typeof e.componentWillMount!="function"||(f=e.state,typeof e.componentWillMount=="function"&&e.componentWillMount(),typeof e.UNSAFE_componentWillMount=="function"&&e.UNSAFE_componentWillMount(),f!==e.state&&dc.enqueueReplaceState(e,e.state,null),qa(t,a,e,n),pa(),e.state=t.memoizedState),typeof e.componentDidMount=="function"&&(t.flags|=4194308),a=!0}else if(l===null){e=t.stateNode;var c=t.memoizedProps,i=mu(u,c);e.props=i;var m=e.context,g=u.contextType;f=Yu,typeof g=="object"&&g!==null&&(f=ml(g));var s=u.getDerivedStateFromProps;g=typeof s=="function"||typeof e.getSnapshotBeforeUpdate=="function",c=t.pendingProps!==c,g||typeof e.UNSAFE_componentWillReceiveProps!="function"&&typeof e.componentWillReceiveProps!="function"||(c||m!==f)&&L0(t,e,a,f),Dt=!1;var h=t.memoizedState;e.state=h,qa(t,a,e,n),pa(),m=t.memoizedState,c||h!==m||Dt?(typeof s=="function"&&(Ef(t,u,s,a),m=t.memoizedState),(i=Dt||x0(t,u,i,a,h,m,f))?(g||typeof e.UNSAFE_componentWillMount!="function"&&typeof e.componentWillMount!="function"||(typeof e.componentWillMount=="function"&&e.componentWillMount(),typeof e.UNSAFE_componentWillMount=="function"&&e.UNSAFE_componentWillMount()),typeof e.componentDidMount=="function"&&(t.flags|=4194308)):(typeof e.componentDidMount=="function"&&(t.flags|=4194308),t.memoizedProps=a,t.memoizedState=m),e.props=a,e.state=m,e.context=f,a=i):(typeof e.componentDidMount=="function"&&(t.flags|=4194308),a=!1)}else{e=t.stateNode,ec(l,t),f=t.memoizedProps,g=mu(u,f),e.props=g,s=t.pendingProps,h=e.context,m=u.contextType,i=Yu,typeof m=="object"&&m!==null&&(i=ml(m)),c=u.getDerivedStateFromProps,(m=typeof c=="function"||typeof e.getSnapshotBeforeUpdate=="function")||typeof e.UNSAFE_componentWillReceiveProps!="function"&&typeof e.componentWillReceiveProps!="function"||(f!==s||h!==i)&&L0(t,e,a,i),Dt=!1,h=t.memoizedState,e.state=h,qa(t,a,e,n),pa();var S=t.memoizedState;f!==s||h!==S||Dt||l!==null&&l.dependencies!==null&&ne(l.dependencies)?(typeof c=="function"&&(Ef(t,u,c,a),S=t.memoizedState),(g=Dt||x0(t,u,g,a,h,S,i)||l!==null&&l.dependencies!==null&&ne(l.dependencies))?(m||typeof e.UNSAFE_componentWillUpdate!="function"&&typeof e.componentWillUpdate!="function"||(typeof e.componentWillUpdate=="function"&&e.componentWillUpdate(a,S,i),typeof e.UNSAFE_componentWillUpdate=="function"&&e.UNSAFE_componentWillUpdate(a,S,i)),typeof e.componentDidUpdate=="function"&&(t.flags|=4),typeof e.getSnapshotBeforeUpdate=="function"&&(t.flags|=1024)):(typeof e.componentDidUpdate!="function"||f===l.memoizedProps&&h===l.memoizedState||(t.flags|=4),typeof e.getSnapshotBeforeUpdate!="function"||f===l.memoizedProps&&h===l.memoizedState||(t.flags|=1024),t.memoizedProps=a,t.memoizedState=S),e.props=a,e.state=S,e.context=i,a=g):(typeof e.componentDidUpdate!="function"||f===l.memoizedProps&&h===l.memoizedState||(t.flags|=4),typeof e.getSnapshotBeforeUpdate!="function"||f===l.memoizedProps&&h===l.memoizedState||(t.flags|=1024),a=!1)}return e=a,Kn(l,t),a=(t.flags&128)!==0,e||a?(e=t.stateNode,u=a&&typeof u.getDerivedStateFromError!="function"?null:e.render(),t.flags|=1,l!==null&&a?(t.child=yu(t,l.child,null,n),t.child=yu(t,null,u,n)):il(l,t,u,n),t.memoizedState=e.state,l=t.child):l=bt(l,t,n),l}function k0(l,t,u,a){return cu(),t.flags|=256,il(l,t,u,a),t.child}var Tf={dehydrated:null,treeContext:null,retryLane:0,hydrationErrors:null};function Af(l){return{baseLanes:l,cachePool:Ty()}}function Of(l,t,u){return l=l!==null?l.childLanes&~u:0,t&&(l|=Ul),l}function hv(l,t,u){var a=t.pendingProps,n=!1,e=(t.flags&128)!==0,f;if((f=e)||(f=l!==null&&l.memoizedState===null?!1:(k.current&2)!==0),f&&(n=!0,t.flags&=-129),f=(t.flags&32)!==0,t.flags&=-33,l===null){if(q){if(n?Ht(t):Nt(t),(l=J)?(l=nm(l,Vl),l=l!==null&&l.data!=="&"?l:null,l!==null&&(t.memoizedState={dehydrated:l,treeContext:Jt!==null?{id:$l,overflow:Fl}:null,retryLane:536870912,hydrationErrors:null},u=sy(l),u.return=t,t.child=u,vl=t,J=null)):l=null,l===null)throw rt(t);return Hc(l)?t.lanes=32:t.lanes=536870912,null}var c=a.children;return a=a.fallback,n?(Nt(t),n=t.mode,c=me({mode:"hidden",children:c},n),a=au(a,n,u,null),c.return=t,a.return=t,c.sibling=a,t.child=c,a=t.child,a.memoizedState=Af(u),a.childLanes=Of(l,f,u),t.memoizedState=Tf,Oa(null,a)):(Ht(t),gc(t,c))}var i=l.memoizedState;if(i!==null&&(c=i.dehydrated,c!==null)){if(e)t.flags&256?(Ht(t),t.flags&=-257,t=_f(l,t,u)):t.memoizedState!==null?(Nt(t),t.child=l.child,t.flags|=128,t=null):(Nt(t),c=a.fallback,n=t.mode,a=me({mode:"visible",children:a.children},n),c=au(c,n,u,null),c.flags|=2,a.return=t,c.return=t,a.sibling=c,t.child=a,yu(t,l.child,null,u),a=t.child,a.memoizedState=Af(u),a.childLanes=Of(l,f,u),t.memoizedState=Tf,t=Oa(null,a));else if(Ht(t),Hc(c)){if(f=c.nextSibling&&c.nextSibling.dataset,f)var m=f.dgst;f=m,a=Error(b(419)),a.stack="",a.digest=f,La({value:a,source:null,stack:null}),t=_f(l,t,u)}else if(ul||na(l,t,u,!1),f=(u&l.childLanes)!==0,ul||f){if(f=V,f!==null&&(a=L1(f,u),a!==0&&a!==i.retryLane))throw i.retryLane=a,gu(l,a),Tl(f,l,a),hi;Uc(c)||ge(),t=_f(l,t,u)}else Uc(c)?(t.flags|=192,t.child=l.child,t=null):(l=i.treeContext,J=Ll(c.nextSibling),vl=t,q=!0,Xt=null,Vl=!1,l!==null&&zy(t,l),t=gc(t,a.children),t.flags|=4096);return t}return n?(Nt(t),c=a.fallback,n=t.mode,i=l.child,m=i.sibling,a=dt(i,{mode:"hidden",children:a.children}),a.subtreeFlags=i.subtreeFlags&65011712,m!==null?c=dt(m,c):(c=au(c,n,u,null),c.flags|=2),c.return=t,a.return=t,a.sibling=c,t.child=a,Oa(null,a),a=t.child,c=l.child.memoizedState,c===null?c=Af(u):(n=c.cachePool,n!==null?(i=tl._currentValue,n=n.parent!==i?{parent:i,pool:i}:n):n=Ty(),c={baseLanes:c.baseLanes|u,cachePool:n}),a.memoizedState=c,a.childLanes=Of(l,f,u),t.memoizedState=Tf,Oa(l.child,a)):(Ht(t),u=l.child,l=u.sibling,u=dt(u,{mode:"visible",children:a.children}),u.return=t,u.sibling=null,l!==null&&(f=t.deletions,f===null?(t.deletions=[l],t.flags|=16):f.push(l)),t.child=u,t.memoizedState=null,u)}function gc(l,t){return t=me({mode:"visible",children:t},l.mode),t.return=l,l.child=t}function me(l,t){return l=Dl(22,l,null,t),l.lanes=0,l}function _f(l,t,u){return yu(t,l.child,null,u),l=gc(t,t.pendingProps.children),l.flags|=2,t.memoizedState=null,l}function I0(l,t,u){l.lanes|=t;var a=l.alternate;a!==null&&(a.lanes|=t),uc(l.return,t,u)}function Mf(l,t,u,a,n,e){var f=l.memoizedState;f===null?l.memoizedState={isBackwards:t,rendering:null,renderingStartTime:0,last:a,tail:u,tailMode:n,treeForkCount:e}:(f.isBackwards=t,f.rendering=null,f.renderingStartTime=0,f.last=a,f.tail=u,f.tailMode=n,f.treeForkCount=e)}function Sv(l,t,u){var a=t.pendingProps,n=a.revealOrder,e=a.tail;a=a.children;var f=k.current,c=(f&2)!==0;if(c?(f=f&1|2,t.flags|=128):f&=1,x(k,f),il(l,t,a,u),a=q?xa:0,!c&&l!==null&&(l.flags&128)!==0)l:for(l=t.child;l!==null;){if(l.tag===13)l.memoizedState!==null&&I0(l,u,t);else if(l.tag===19)I0(l,u,t);else if(l.child!==null){l.child.return=l,l=l.child;continue}if(l===t)break l;for(;l.sibling===null;){if(l.return===null||l.return===t)break l;l=l.return}l.sibling.return=l.return,l=l.sibling}switch(n){case"forwards":for(u=t.child,n=null;u!==null;)l=u.alternate,l!==null&&ce(l)===null&&(n=u),u=u.sibling;u=n,u===null?(n=t.child,t.child=null):(n=u.sibling,u.sibling=null),Mf(t,!1,n,u,e,a);break;case"backwards":case"unstable_legacy-backwards":for(u=null,n=t.child,t.child=null;n!==null;){if(l=n.alternate,l!==null&&ce(l)===null){t.child=n;break}l=n.sibling,n.sibling=u,u=n,n=l}Mf(t,!0,u,null,e,a);break;case"together":Mf(t,!1,null,null,void 0,a);break;default:t.memoizedState=null}return t.child}function bt(l,t,u){if(l!==null&&(t.dependencies=l.dependencies),Wt|=t.lanes,(u&t.childLanes)===0)if(l!==null){if(na(l,t,u,!1),(u&t.childLanes)===0)return null}else return null;if(l!==null&&t.child!==l.child)throw Error(b(153));if(t.child!==null){for(l=t.child,u=dt(l,l.pendingProps),t.child=u,u.return=t;l.sibling!==null;)l=l.sibling,u=u.sibling=dt(l,l.pendingProps),u.return=t;u.sibling=null}return t.child}function Si(l,t){return(l.lanes&t)!==0?!0:(l=l.dependencies,!!(l!==null&&ne(l)))}function Ah(l,t,u){switch(t.tag){case 3:kn(t,t.stateNode.containerInfo),Ut(t,tl,l.memoizedState.cache),cu();break;case 27:case 5:Lf(t);break;case 4:kn(t,t.stateNode.containerInfo);break;case 10:Ut(t,t.type,t.memoizedProps.value);break;case 31:if(t.memoizedState!==null)return t.flags|=128,ic(t),null;break;case 13:var a=t.memoizedState;if(a!==null)return a.dehydrated!==null?(Ht(t),t.flags|=128,null):(u&t.child.childLanes)!==0?hv(l,t,u):(Ht(t),l=bt(l,t,u),l!==null?l.sibling:null);Ht(t);break;case 19:var n=(l.flags&128)!==0;if(a=(u&t.childLanes)!==0,a||(na(l,t,u,!1),a=(u&t.childLanes)!==0),n){if(a)return Sv(l,t,u);t.flags|=128}if(n=t.memoizedState,n!==null&&(n.rendering=null,n.tail=null,n.lastEffect=null),x(k,k.current),a)break;return null;case 22:return t.lanes=0,dv(l,t,u,t.pendingProps);case 24:Ut(t,tl,l.memoizedState.cache)}return bt(l,t,u)}function gv(l,t,u){if(l!==null)if(l.memoizedProps!==t.pendingProps)ul=!0;else{if(!Si(l,u)&&(t.flags&128)===0)return ul=!1,Ah(l,t,u);ul=(l.flags&131072)!==0}else ul=!1,q&&(t.flags&1048576)!==0&&by(t,xa,t.index);switch(t.lanes=0,t.tag){case 16:l:{var a=t.pendingProps;if(l=lu(t.elementType),t.type=l,typeof l=="function")rc(l)?(a=mu(l,a),t.tag=1,t=F0(null,t,l,a,u)):(t.tag=0,t=Sc(null,t,l,a,u));else{if(l!=null){var n=l.$$typeof;if(n===Rc){t.tag=11,t=J0(null,t,l,a,u);break l}else if(n===Bc){t.tag=14,t=r0(null,t,l,a,u);break l}}throw t=Vf(l)||l,Error(b(306,t,""))}}return t;case 0:return Sc(l,t,t.type,t.pendingProps,u);case 1:return a=t.type,n=mu(a,t.pendingProps),F0(l,t,a,n,u);case 3:l:{if(kn(t,t.stateNode.containerInfo),l===null)throw Error(b(387));a=t.pendingProps;var e=t.memoizedState;n=e.element,ec(l,t),qa(t,a,null,u);var f=t.memoizedState;if(a=f.cache,Ut(t,tl,a),a!==e.cache&&ac(t,[tl],u,!0),pa(),a=f.element,e.isDehydrated)if(e={element:a,isDehydrated:!1,cache:f.cache},t.updateQueue.baseState=e,t.memoizedState=e,t.flags&256){t=k0(l,t,a,u);break l}else if(a!==n){n=jl(Error(b(424)),t),La(n),t=k0(l,t,a,u);break l}else for(l=t.stateNode.containerInfo,l.nodeType===9?l=l.body:l=l.nodeName==="HTML"?l.ownerDocument.body:l,J=Ll(l.firstChild),vl=t,q=!0,Xt=null,Vl=!0,u=_y(t,null,a,u),t.child=u;u;)u.flags=u.flags&-3|4096,u=u.sibling;else{if(cu(),a===n){t=bt(l,t,u);break l}il(l,t,a,u)}t=t.child}return t;case 26:return Kn(l,t),l===null?(u=E1(t.type,null,t.pendingProps,null))?t.memoizedState=u:q||(u=t.type,l=t.pendingProps,a=ze(Gt.current).createElement(u),a[yl]=t,a[Al]=l,dl(a,u,l),fl(a),t.stateNode=a):t.memoizedState=E1(t.type,l.memoizedProps,t.pendingProps,l.memoizedState),null;case 27:return Lf(t),l===null&&q&&(a=t.stateNode=em(t.type,t.pendingProps,Gt.current),vl=t,Vl=!0,n=J,Ft(t.type)?(Nc=n,J=Ll(a.firstChild)):J=n),il(l,t,t.pendingProps.children,u),Kn(l,t),l===null&&(t.flags|=4194304),t.child;case 5:return l===null&&q&&((n=a=J)&&(a=Fh(a,t.type,t.pendingProps,Vl),a!==null?(t.stateNode=a,vl=t,J=Ll(a.firstChild),Vl=!1,n=!0):n=!1),n||rt(t)),Lf(t),n=t.type,e=t.pendingProps,f=l!==null?l.memoizedProps:null,a=e.children,Mc(n,e)?a=null:f!==null&&Mc(n,f)&&(t.flags|=32),t.memoizedState!==null&&(n=ti(l,t,hh,null,null,u),$a._currentValue=n),Kn(l,t),il(l,t,a,u),t.child;case 6:return l===null&&q&&((l=u=J)&&(u=kh(u,t.pendingProps,Vl),u!==null?(t.stateNode=u,vl=t,J=null,l=!0):l=!1),l||rt(t)),null;case 13:return hv(l,t,u);case 4:return kn(t,t.stateNode.containerInfo),a=t.pendingProps,l===null?t.child=yu(t,null,a,u):il(l,t,a,u),t.child;case 11:return J0(l,t,t.type,t.pendingProps,u);case 7:return il(l,t,t.pendingProps,u),t.child;case 8:return il(l,t,t.pendingProps.children,u),t.child;case 12:return il(l,t,t.pendingProps.children,u),t.child;case 10:return a=t.pendingProps,Ut(t,t.type,a.value),il(l,t,a.children,u),t.child;case 9:return n=t.type._context,a=t.pendingProps.children,iu(t),n=ml(n),a=a(n),t.flags|=1,il(l,t,a,u),t.child;case 14:return r0(l,t,t.type,t.pendingProps,u);case 15:return mv(l,t,t.type,t.pendingProps,u);case 19:return Sv(l,t,u);case 31:return Th(l,t,u);case 22:return dv(l,t,u,t.pendingProps);case 24:return iu(t),a=ml(tl),l===null?(n=Fc(),n===null&&(n=V,e=$c(),n.pooledCache=e,e.refCount++,e!==null&&(n.pooledCacheLanes|=u),n=e),t.memoizedState={parent:a,cache:n},Ic(t),Ut(t,tl,n)):((l.lanes&u)!==0&&(ec(l,t),qa(t,null,null,u),pa()),n=l.memoizedState,e=t.memoizedState,n.parent!==a?(n={parent:a,cache:a},t.memoizedState=n,t.lanes===0&&(t.memoizedState=t.updateQueue.baseState=n),Ut(t,tl,a)):(a=e.cache,Ut(t,tl,a),a!==n.cache&&ac(t,[tl],u,!0))),il(l,t,t.pendingProps.children,u),t.child;case 29:throw t.pendingProps}throw Error(b(156,t.tag))}function at(l){l.flags|=4}function Df(l,t,u,a,n){if((t=(l.mode&32)!==0)&&(t=!1),t){if(l.flags|=16777216,(n&335544128)===n)if(l.stateNode.complete)l.flags|=8192;else if(Zv())l.flags|=8192;else throw eu=ee,kc}else l.flags&=-16777217}function P0(l,t){if(t.type!=="stylesheet"||(t.state.loading&4)!==0)l.flags&=-16777217;else if(l.flags|=16777216,!im(t))if(Zv())l.flags|=8192;else throw eu=ee,kc}function Hn(l,t){t!==null&&(l.flags|=4),l.flags&16384&&(t=l.tag!==22?j1():536870912,l.lanes|=t,ku|=t)}function oa(l,t){if(!q)switch(l.tailMode){case"hidden":t=l.tail;for(var u=null;t!==null;)t.alternate!==null&&(u=t),t=t.sibling;u===null?l.tail=null:u.sibling=null;break;case"collapsed":u=l.tail;for(var a=null;u!==null;)u.alternate!==null&&(a=u),u=u.sibling;a===null?t||l.tail===null?l.tail=null:l.tail.sibling=null:a.sibling=null}}function K(l){var t=l.alternate!==null&&l.alternate.child===l.child,u=0,a=0;if(t)for(var n=l.child;n!==null;)u|=n.lanes|n.childLanes,a|=n.subtreeFlags&65011712,a|=n.flags&65011712,n.return=l,n=n.sibling;else for(n=l.child;n!==null;)u|=n.lanes|n.childLanes,a|=n.subtreeFlags,a|=n.flags,n.return=l,n=n.sibling;return l.subtreeFlags|=a,l.childLanes=u,t}function Oh(l,t,u){var a=t.pendingProps;switch(Wc(t),t.tag){case 16:case 15:case 0:case 11:case 7:case 8:case 12:case 9:case 14:return K(t),null;case 1:return K(t),null;case 3:return u=t.stateNode,a=null,l!==null&&(a=l.memoizedState.cache),t.memoizedState.cache!==a&&(t.flags|=2048),ht(tl),Ju(),u.pendingContext&&(u.context=u.pendingContext,u.pendingContext=null),(l===null||l.child===null)&&(Au(t)?at(t):l===null||l.memoizedState.isDehydrated&&(t.flags&256)===0||(t.flags|=1024,sf())),K(t),null;case 26:var n=t.type,e=t.memoizedState;return l===null?(at(t),e!==null?(K(t),P0(t,e)):(K(t),Df(t,n,null,a,u))):e?e!==l.memoizedState?(at(t),K(t),P0(t,e)):(K(t),t.flags&=-16777217):(l=l.memoizedProps,l!==a&&at(t),K(t),Df(t,n,l,a,u)),null;case 27:if(In(t),u=Gt.current,n=t.type,l!==null&&t.stateNode!=null)l.memoizedProps!==a&&at(t);else{if(!a){if(t.stateNode===null)throw Error(b(166));return K(t),null}l=Il.current,Au(t)?H0(t,l):(l=em(n,a,u),t.stateNode=l,at(t))}return K(t),null;case 5:if(In(t),n=t.type,l!==null&&t.stateNode!=null)l.memoizedProps!==a&&at(t);else{if(!a){if(t.stateNode===null)throw Error(b(166));return K(t),null}if(e=Il.current,Au(t))H0(t,e);else{var f=ze(Gt.current);switch(e){case 1:e=f.createElementNS("http://www.w3.org/2000/svg",n);break;case 2:e=f.createElementNS("http://www.w3.org/1998/Math/MathML",n);break;default:switch(n){case"svg":e=f.createElementNS("http://www.w3.org/2000/svg",n);break;case"math":e=f.createElementNS("http://www.w3.org/1998/Math/MathML",n);break;case"script":e=f.createElement("div"),e.innerHTML="<script><\/script>",e=e.removeChild(e.firstChild);break;case"select":e=typeof a.is=="string"?f.createElement("select",{is:a.is}):f.createElement("select"),a.multiple?e.multiple=!0:a.size&&(e.size=a.size);break;default:e=typeof a.is=="string"?f.createElement(n,{is:a.is}):f.createElement(n)}}e[yl]=t,e[Al]=a;l:for(f=t.child;f!==null;){if(f.tag===5||f.tag===6)e.appendChild(f.stateNode);else if(f.tag!==4&&f.tag!==27&&f.child!==null){f.child.return=f,f=f.child;continue}if(f===t)break l;for(;f.sibling===null;){if(f.return===null||f.return===t)break l;f=f.return}f.sibling.return=f.return,f=f.sibling}t.stateNode=e;l:switch(dl(e,n,a),n){case"button":case"input":case"select":case"textarea":a=!!a.autoFocus;break l;case"img":a=!0;break l;default:a=!1}a&&at(t)}}return K(t),Df(t,t.type,l===null?null:l.memoizedProps,t.pendingProps,u),null;case 6:if(l&&t.stateNode!=null)l.memoizedProps!==a&&at(t);else{if(typeof a!="string"&&t.stateNode===null)throw Error(b(166));if(l=Gt.current,Au(t)){if(l=t.stateNode,u=t.memoizedProps,a=null,n=vl,n!==null)switch(n.tag){case 27:case 5:a=n.memoizedProps}l[yl]=t,l=!!(l.nodeValue===u||a!==null&&a.suppressHydrationWarning===!0||tm(l.nodeValue,u)),l||rt(t,!0)}else l=ze(l).createTextNode(a),l[yl]=t,t.stateNode=l}return K(t),null;case 31:if(u=t.memoizedState,l===null||l.memoizedState!==null){if(a=Au(t),u!==null){if(l===null){if(!a)throw Error(b(318));if(l=t.memoizedState,l=l!==null?l.dehydrated:null,!l)throw Error(b(557));l[yl]=t}else cu(),(t.flags&128)===0&&(t.memoizedState=null),t.flags|=4;K(t),l=!1}else u=sf(),l!==null&&l.memoizedState!==null&&(l.memoizedState.hydrationErrors=u),l=!0;if(!l)return t.flags&256?(Ml(t),t):(Ml(t),null);if((t.flags&128)!==0)throw Error(b(558))}return K(t),null;case 13:if(a=t.memoizedState,l===null||l.memoizedState!==null&&l.memoizedState.dehydrated!==null){if(n=Au(t),a!==null&&a.dehydrated!==null){if(l===null){if(!n)throw Error(b(318));if(n=t.memoizedState,n=n!==null?n.dehydrated:null,!n)throw Error(b(317));n[yl]=t}else cu(),(t.flags&128)===0&&(t.memoizedState=null),t.flags|=4;K(t),n=!1}else n=sf(),l!==null&&l.memoizedState!==null&&(l.memoizedState.hydrationErrors=n),n=!0;if(!n)return t.flags&256?(Ml(t),t):(Ml(t),null)}return Ml(t),(t.flags&128)!==0?(t.lanes=u,t):(u=a!==null,l=l!==null&&l.memoizedState!==null,u&&(a=t.child,n=null,a.alternate!==null&&a.alternate.memoizedState!==null&&a.alternate.memoizedState.cachePool!==null&&(n=a.alternate.memoizedState.cachePool.pool),e=null,a.memoizedState!==null&&a.memoizedState.cachePool!==null&&(e=a.memoizedState.cachePool.pool),e!==n&&(a.flags|=2048)),u!==l&&u&&(t.child.flags|=8192),Hn(t,t.updateQueue),K(t),null);case 4:return Ju(),l===null&&Ti(t.stateNode.containerInfo),K(t),null;case 10:return ht(t.type),K(t),null;case 19:if(cl(k),a=t.memoizedState,a===null)return K(t),null;if(n=(t.flags&128)!==0,e=a.rendering,e===null)if(n)oa(a,!1);else{if(F!==0||l!==null&&(l.flags&128)!==0)for(l=t.child;l!==null;){if(e=ce(l),e!==null){for(t.flags|=128,oa(a,!1),l=e.updateQueue,t.updateQueue=l,Hn(t,l),t.subtreeFlags=0,l=u,u=t.child;u!==null;)oy(u,l),u=u.sibling;return x(k,k.current&1|2),q&&ct(t,a.treeForkCount),t.child}l=l.sibling}a.tail!==null&&Hl()>he&&(t.flags|=128,n=!0,oa(a,!1),t.lanes=4194304)}else{if(!n)if(l=ce(e),l!==null){if(t.flags|=128,n=!0,l=l.updateQueue,t.updateQueue=l,Hn(t,l),oa(a,!0),a.tail===null&&a.tailMode==="hidden"&&!e.alternate&&!q)return K(t),null}else 2*Hl()-a.renderingStartTime>he&&u!==536870912&&(t.flags|=128,n=!0,oa(a,!1),t.lanes=4194304);a.isBackwards?(e.sibling=t.child,t.child=e):(l=a.last,l!==null?l.sibling=e:t.child=e,a.last=e)}return a.tail!==null?(l=a.tail,a.rendering=l,a.tail=l.sibling,a.renderingStartTime=Hl(),l.sibling=null,u=k.current,x(k,n?u&1|2:u&1),q&&ct(t,a.treeForkCount),l):(K(t),null);case 22:case 23:return Ml(t),Pc(),a=t.memoizedState!==null,l!==null?l.memoizedState!==null!==a&&(t.flags|=8192):a&&(t.flags|=8192),a?(u&536870912)!==0&&(t.flags&128)===0&&(K(t),t.subtreeFlags&6&&(t.flags|=8192)):K(t),u=t.updateQueue,u!==null&&Hn(t,u.retryQueue),u=null,l!==null&&l.memoizedState!==null&&l.memoizedState.cachePool!==null&&(u=l.memoizedState.cachePool.pool),a=null,t.memoizedState!==null&&t.memoizedState.cachePool!==null&&(a=t.memoizedState.cachePool.pool),a!==u&&(t.flags|=2048),l!==null&&cl(nu),null;case 24:return u=null,l!==null&&(u=l.memoizedState.cache),t.memoizedState.cache!==u&&(t.flags|=2048),ht(tl),K(t),null;case 25:return null;case 30:return null}throw Error(b(156,t.tag))}function _h(l,t){switch(Wc(t),t.tag){case 1:return l=t.flags,l&65536?(t.flags=l&-65537|128,t):null;case 3:return ht(tl),Ju(),l=t.flags,(l&65536)!==0&&(l&128)===0?(t.flags=l&-65537|128,t):null;case 26:case 27:case 5:return In(t),null;case 31:if(t.memoizedState!==null){if(Ml(t),t.alternate===null)throw Error(b(340));cu()}return l=t.flags,l&65536?(t.flags=l&-65537|128,t):null;case 13:if(Ml(t),l=t.memoizedState,l!==null&&l.dehydrated!==null){if(t.alternate===null)throw Error(b(340));cu()}return l=t.flags,l&65536?(t.flags=l&-65537|128,t):null;case 19:return cl(k),null;case 4:return Ju(),null;case 10:return ht(t.type),null;case 22:case 23:return Ml(t),Pc(),l!==null&&cl(nu),l=t.flags,l&65536?(t.flags=l&-65537|128,t):null;case 24:return ht(tl),null;case 25:return null;default:return null}}function ov(l,t){switch(Wc(t),t.tag){case 3:ht(tl),Ju();break;case 26:case 27:case 5:In(t);break;case 4:Ju();break;case 31:t.memoizedState!==null&&Ml(t);break;case 13:Ml(t);break;case 19:cl(k);break;case 10:ht(t.type);break;case 22:case 23:Ml(t),Pc(),l!==null&&cl(nu);break;case 24:ht(tl)}}function fn(l,t){try{var u=t.updateQueue,a=u!==null?u.lastEffect:null;if(a!==null){var n=a.next;u=n;do{if((u.tag&l)===l){a=void 0;var e=u.create,f=u.inst;a=e(),f.destroy=a}u=u.next}while(u!==n)}}catch(c){X(t,t.return,c)}}function wt(l,t,u){try{var a=t.updateQueue,n=a!==null?a.lastEffect:null;if(n!==null){var e=n.next;a=e;do{if((a.tag&l)===l){var f=a.inst,c=f.destroy;if(c!==void 0){f.destroy=void 0,n=t;var i=u,m=c;try{m()}catch(g){X(n,i,g)}}}a=a.next}while(a!==e)}}catch(g){X(t,t.return,g)}}function sv(l){var t=l.updateQueue;if(t!==null){var u=l.stateNode;try{Dy(t,u)}catch(a){X(l,l.return,a)}}}function bv(l,t,u){u.props=mu(l.type,l.memoizedProps),u.state=l.memoizedState;try{u.componentWillUnmount()}catch(a){X(l,t,a)}}function Ba(l,t){try{var u=l.ref;if(u!==null){switch(l.tag){case 26:case 27:case 5:var a=l.stateNode;break;case 30:a=l.stateNode;break;default:a=l.stateNode}typeof u=="function"?l.refCleanup=u(a):u.current=a}}catch(n){X(l,t,n)}}function kl(l,t){var u=l.ref,a=l.refCleanup;if(u!==null)if(typeof a=="function")try{a()}catch(n){X(l,t,n)}finally{l.refCleanup=null,l=l.alternate,l!=null&&(l.refCleanup=null)}else if(typeof u=="function")try{u(null)}catch(n){X(l,t,n)}else u.current=null}function zv(l){var t=l.type,u=l.memoizedProps,a=l.stateNode;try{l:switch(t){case"button":case"input":case"select":case"textarea":u.autoFocus&&a.focus();break l;case"img":u.src?a.src=u.src:u.srcSet&&(a.srcset=u.srcSet)}}catch(n){X(l,l.return,n)}}function Uf(l,t,u){try{var a=l.stateNode;Kh(a,l.type,u,t),a[Al]=t}catch(n){X(l,l.return,n)}}function Ev(l){return l.tag===5||l.tag===3||l.tag===26||l.tag===27&&Ft(l.type)||l.tag===4}function Hf(l){l:for(;;){for(;l.sibling===null;){if(l.return===null||Ev(l.return))return null;l=l.return}for(l.sibling.return=l.return,l=l.sibling;l.tag!==5&&l.tag!==6&&l.tag!==18;){if(l.tag===27&&Ft(l.type)||l.flags&2||l.child===null||l.tag===4)continue l;l.child.return=l,l=l.child}if(!(l.flags&2))return l.stateNode}}function oc(l,t,u){var a=l.tag;if(a===5||a===6)l=l.stateNode,t?(u.nodeType===9?u.body:u.nodeName==="HTML"?u.ownerDocument.body:u).insertBefore(l,t):(t=u.nodeType===9?u.body:u.nodeName==="HTML"?u.ownerDocument.body:u,t.appendChild(l),u=u._reactRootContainer,u!=null||t.onclick!==null||(t.onclick=vt));else if(a!==4&&(a===27&&Ft(l.type)&&(u=l.stateNode,t=null),l=l.child,l!==null))for(oc(l,t,u),l=l.sibling;l!==null;)oc(l,t,u),l=l.sibling}function de(l,t,u){var a=l.tag;if(a===5||a===6)l=l.stateNode,t?u.insertBefore(l,t):u.appendChild(l);else if(a!==4&&(a===27&&Ft(l.type)&&(u=l.stateNode),l=l.child,l!==null))for(de(l,t,u),l=l.sibling;l!==null;)de(l,t,u),l=l.sibling}function Tv(l){var t=l.stateNode,u=l.memoizedProps;try{for(var a=l.type,n=t.attributes;n.length;)t.removeAttributeNode(n[0]);dl(t,a,u),t[yl]=l,t[Al]=u}catch(e){X(l,l.return,e)}}var it=!1,ll=!1,Nf=!1,l1=typeof WeakSet=="function"?WeakSet:Set,el=null;function Mh(l,t){if(l=l.containerInfo,Oc=Oe,l=iy(l),Lc(l)){if("selectionStart"in l)var u={start:l.selectionStart,end:l.selectionEnd};else l:{u=(u=l.ownerDocument)&&u.defaultView||window;var a=u.getSelection&&u.getSelection();if(a&&a.rangeCount!==0){u=a.anchorNode;var n=a.anchorOffset,e=a.focusNode;a=a.focusOffset;try{u.nodeType,e.nodeType}catch{u=null;break l}var f=0,c=-1,i=-1,m=0,g=0,s=l,h=null;t:for(;;){for(var S;s!==u||n!==0&&s.nodeType!==3||(c=f+n),s!==e||a!==0&&s.nodeType!==3||(i=f+a),s.nodeType===3&&(f+=s.nodeValue.length),(S=s.firstChild)!==null;)h=s,s=S;for(;;){if(s===l)break t;if(h===u&&++m===n&&(c=f),h===e&&++g===a&&(i=f),(S=s.nextSibling)!==null)break;s=h,h=s.parentNode}s=S}u=c===-1||i===-1?null:{start:c,end:i}}else u=null}u=u||{start:0,end:0}}else u=null;for(_c={focusedElem:l,selectionRange:u},Oe=!1,el=t;el!==null;)if(t=el,l=t.child,(t.subtreeFlags&1028)!==0&&l!==null)l.return=t,el=l;else for(;el!==null;){switch(t=el,e=t.alternate,l=t.flags,t.tag){case 0:if((l&4)!==0&&(l=t.updateQueue,l=l!==null?l.events:null,l!==null))for(u=0;u<l.length;u++)n=l[u],n.ref.impl=n.nextImpl;break;case 11:case 15:break;case 1:if((l&1024)!==0&&e!==null){l=void 0,u=t,n=e.memoizedProps,e=e.memoizedState,a=u.stateNode;try{var z=mu(u.type,n);l=a.getSnapshotBeforeUpdate(z,e),a.__reactInternalSnapshotBeforeUpdate=l}catch(A){X(u,u.return,A)}}break;case 3:if((l&1024)!==0){if(l=t.stateNode.containerInfo,u=l.nodeType,u===9)Dc(l);else if(u===1)switch(l.nodeName){case"HEAD":case"HTML":case"BODY":Dc(l);break;default:l.textContent=""}}break;case 5:case 26:case 27:case 6:case 4:case 17:break;default:if((l&1024)!==0)throw Error(b(163))}if(l=t.sibling,l!==null){l.return=t.return,el=l;break}el=t.return}}function Av(l,t,u){var a=u.flags;switch(u.tag){case 0:case 11:case 15:et(l,u),a&4&&fn(5,u);break;case 1:if(et(l,u),a&4)if(l=u.stateNode,t===null)try{l.componentDidMount()}catch(f){X(u,u.return,f)}else{var n=mu(u.type,t.memoizedProps);t=t.memoizedState;try{l.componentDidUpdate(n,t,l.__reactInternalSnapshotBeforeUpdate)}catch(f){X(u,u.return,f)}}a&64&&sv(u),a&512&&Ba(u,u.return);break;case 3:if(et(l,u),a&64&&(l=u.updateQueue,l!==null)){if(t=null,u.child!==null)switch(u.child.tag){case 27:case 5:t=u.child.stateNode;break;case 1:t=u.child.stateNode}try{Dy(l,t)}catch(f){X(u,u.return,f)}}break;case 27:t===null&&a&4&&Tv(u);case 26:case 5:et(l,u),t===null&&a&4&&zv(u),a&512&&Ba(u,u.return);break;case 12:et(l,u);break;case 31:et(l,u),a&4&&Mv(l,u);break;case 13:et(l,u),a&4&&Dv(l,u),a&64&&(l=u.memoizedState,l!==null&&(l=l.dehydrated,l!==null&&(u=Yh.bind(null,u),Ih(l,u))));break;case 22:if(a=u.memoizedState!==null||it,!a){t=t!==null&&t.memoizedState!==null||ll,n=it;var e=ll;it=a,(ll=t)&&!e?ft(l,u,(u.subtreeFlags&8772)!==0):et(l,u),it=n,ll=e}break;case 30:break;default:et(l,u)}}function Ov(l){var t=l.alternate;t!==null&&(l.alternate=null,Ov(t)),l.child=null,l.deletions=null,l.sibling=null,l.tag===5&&(t=l.stateNode,t!==null&&Xc(t)),l.stateNode=null,l.return=null,l.dependencies=null,l.memoizedProps=null,l.memoizedState=null,l.pendingProps=null,l.stateNode=null,l.updateQueue=null}var W=null,zl=!1;function nt(l,t,u){for(u=u.child;u!==null;)_v(l,t,u),u=u.sibling}function _v(l,t,u){if(Nl&&typeof Nl.onCommitFiberUnmount=="function")try{Nl.onCommitFiberUnmount(Pa,u)}catch{}switch(u.tag){case 26:ll||kl(u,t),nt(l,t,u),u.memoizedState?u.memoizedState.count--:u.stateNode&&(u=u.stateNode,u.parentNode.removeChild(u));break;case 27:ll||kl(u,t);var a=W,n=zl;Ft(u.type)&&(W=u.stateNode,zl=!1),nt(l,t,u),Xa(u.stateNode),W=a,zl=n;break;case 5:ll||kl(u,t);case 6:if(a=W,n=zl,W=null,nt(l,t,u),W=a,zl=n,W!==null)if(zl)try{(W.nodeType===9?W.body:W.nodeName==="HTML"?W.ownerDocument.body:W).removeChild(u.stateNode)}catch(e){X(u,t,e)}else try{W.removeChild(u.stateNode)}catch(e){X(u,t,e)}break;case 18:W!==null&&(zl?(l=W,g1(l.nodeType===9?l.body:l.nodeName==="HTML"?l.ownerDocument.body:l,u.stateNode),ta(l)):g1(W,u.stateNode));break;case 4:a=W,n=zl,W=u.stateNode.containerInfo,zl=!0,nt(l,t,u),W=a,zl=n;break;case 0:case 11:case 14:case 15:wt(2,u,t),ll||wt(4,u,t),nt(l,t,u);break;case 1:ll||(kl(u,t),a=u.stateNode,typeof a.componentWillUnmount=="function"&&bv(u,t,a)),nt(l,t,u);break;case 21:nt(l,t,u);break;case 22:ll=(a=ll)||u.memoizedState!==null,nt(l,t,u),ll=a;break;default:nt(l,t,u)}}function Mv(l,t){if(t.memoizedState===null&&(l=t.alternate,l!==null&&(l=l.memoizedState,l!==null))){l=l.dehydrated;try{ta(l)}catch(u){X(t,t.return,u)}}}function Dv(l,t){if(t.memoizedState===null&&(l=t.alternate,l!==null&&(l=l.memoizedState,l!==null&&(l=l.dehydrated,l!==null))))try{ta(l)}catch(u){X(t,t.return,u)}}function Dh(l){switch(l.tag){case 31:case 13:case 19:var t=l.stateNode;return t===null&&(t=l.stateNode=new l1),t;case 22:return l=l.stateNode,t=l._retryCache,t===null&&(t=l._retryCache=new l1),t;default:throw Error(b(435,l.tag))}}function Nn(l,t){var u=Dh(l);t.forEach(function(a){if(!u.has(a)){u.add(a);var n=Ch.bind(null,l,a);a.then(n,n)}})}function sl(l,t){var u=t.deletions;if(u!==null)for(var a=0;a<u.length;a++){var n=u[a],e=l,f=t,c=f;l:for(;c!==null;){switch(c.tag){case 27:if(Ft(c.type)){W=c.stateNode,zl=!1;break l}break;case 5:W=c.stateNode,zl=!1;break l;case 3:case 4:W=c.stateNode.containerInfo,zl=!0;break l}c=c.return}if(W===null)throw Error(b(160));_v(e,f,n),W=null,zl=!1,e=n.alternate,e!==null&&(e.return=null),n.return=null}if(t.subtreeFlags&13886)for(t=t.child;t!==null;)Uv(t,l),t=t.sibling}var rl=null;function Uv(l,t){var u=l.alternate,a=l.flags;switch(l.tag){case 0:case 11:case 14:case 15:sl(t,l),bl(l),a&4&&(wt(3,l,l.return),fn(3,l),wt(5,l,l.return));break;case 1:sl(t,l),bl(l),a&512&&(ll||u===null||kl(u,u.return)),a&64&&it&&(l=l.updateQueue,l!==null&&(a=l.callbacks,a!==null&&(u=l.shared.hiddenCallbacks,l.shared.hiddenCallbacks=u===null?a:u.concat(a))));break;case 26:var n=rl;if(sl(t,l),bl(l),a&512&&(ll||u===null||kl(u,u.return)),a&4){var e=u!==null?u.memoizedState:null;if(a=l.memoizedState,u===null)if(a===null)if(l.stateNode===null){l:{a=l.type,u=l.memoizedProps,n=n.ownerDocument||n;t:switch(a){case"title":e=n.getElementsByTagName("title")[0],(!e||e[un]||e[yl]||e.namespaceURI==="http://www.w3.org/2000/svg"||e.hasAttribute("itemprop"))&&(e=n.createElement(a),n.head.insertBefore(e,n.querySelector("head > title"))),dl(e,a,u),e[yl]=l,fl(e),a=e;break l;case"link":var f=A1("link","href",n).get(a+(u.href||""));if(f){for(var c=0;c<f.length;c++)if(e=f[c],e.getAttribute("href")===(u.href==null||u.href===""?null:u.href)&&e.getAttribute("rel")===(u.rel==null?null:u.rel)&&e.getAttribute("title")===(u.title==null?null:u.title)&&e.getAttribute("crossorigin")===(u.crossOrigin==null?null:u.crossOrigin)){f.splice(c,1);break t}}e=n.createElement(a),dl(e,a,u),n.head.appendChild(e);break;case"meta":if(f=A1("meta","content",n).get(a+(u.content||""))){for(c=0;c<f.length;c++)if(e=f[c],e.getAttribute("content")===(u.content==null?null:""+u.content)&&e.getAttribute("name")===(u.name==null?null:u.name)&&e.getAttribute("property")===(u.property==null?null:u.property)&&e.getAttribute("http-equiv")===(u.httpEquiv==null?null:u.httpEquiv)&&e.getAttribute("charset")===(u.charSet==null?null:u.charSet)){f.splice(c,1);break t}}e=n.createElement(a),dl(e,a,u),n.head.appendChild(e);break;default:throw Error(b(468,a))}e[yl]=l,fl(e),a=e}l.stateNode=a}else O1(n,l.type,l.stateNode);else l.stateNode=T1(n,a,l.memoizedProps);else e!==a?(e===null?u.stateNode!==null&&(u=u.stateNode,u.parentNode.removeChild(u)):e.count--,a===null?O1(n,l.type,l.stateNode):T1(n,a,l.memoizedProps)):a===null&&l.stateNode!==null&&Uf(l,l.memoizedProps,u.memoizedProps)}break;case 27:sl(t,l),bl(l),a&512&&(ll||u===null||kl(u,u.return)),u!==null&&a&4&&Uf(l,l.memoizedProps,u.memoizedProps);break;case 5:if(sl(t,l),bl(l),a&512&&(ll||u===null||kl(u,u.return)),l.flags&32){n=l.stateNode;try{wu(n,"")}catch(z){X(l,l.return,z)}}a&4&&l.stateNode!=null&&(n=l.memoizedProps,Uf(l,n,u!==null?u.memoizedProps:n)),a&1024&&(Nf=!0);break;case 6:if(sl(t,l),bl(l),a&4){if(l.stateNode===null)throw Error(b(162));a=l.memoizedProps,u=l.stateNode;try{u.nodeValue=a}catch(z){X(l,l.return,z)}}break;case 3:if(wn=null,n=rl,rl=Ee(t.containerInfo),sl(t,l),rl=n,bl(l),a&4&&u!==null&&u.memoizedState.isDehydrated)try{ta(t.containerInfo)}catch(z){X(l,l.return,z)}Nf&&(Nf=!1,Hv(l));break;case 4:a=rl,rl=Ee(l.stateNode.containerInfo),sl(t,l),bl(l),rl=a;break;case 12:sl(t,l),bl(l);break;case 31:sl(t,l),bl(l),a&4&&(a=l.updateQueue,a!==null&&(l.updateQueue=null,Nn(l,a)));break;case 13:sl(t,l),bl(l),l.child.flags&8192&&l.memoizedState!==null!=(u!==null&&u.memoizedState!==null)&&(Ge=Hl()),a&4&&(a=l.updateQueue,a!==null&&(l.updateQueue=null,Nn(l,a)));break;case 22:n=l.memoizedState!==null;var i=u!==null&&u.memoizedState!==null,m=it,g=ll;if(it=m||n,ll=g||i,sl(t,l),ll=g,it=m,bl(l),a&8192)l:for(t=l.stateNode,t._visibility=n?t._visibility&-2:t._visibility|1,n&&(u===null||i||it||ll||tu(l)),u=null,t=l;;){if(t.tag===5||t.tag===26){if(u===null){i=u=t;try{if(e=i.stateNode,n)f=e.style,typeof f.setProperty=="function"?f.setProperty("display","none","important"):f.display="none";else{c=i.stateNode;var s=i.memoizedProps.style,h=s!=null&&s.hasOwnProperty("display")?s.display:null;c.style.display=h==null||typeof h=="boolean"?"":(""+h).trim()}}catch(z){X(i,i.return,z)}}}else if(t.tag===6){if(u===null){i=t;try{i.stateNode.nodeValue=n?"":i.memoizedProps}catch(z){X(i,i.return,z)}}}else if(t.tag===18){if(u===null){i=t;try{var S=i.stateNode;n?o1(S,!0):o1(i.stateNode,!1)}catch(z){X(i,i.return,z)}}}else if((t.tag!==22&&t.tag!==23||t.memoizedState===null||t===l)&&t.child!==null){t.child.return=t,t=t.child;continue}if(t===l)break l;for(;t.sibling===null;){if(t.return===null||t.return===l)break l;u===t&&(u=null),t=t.return}u===t&&(u=null),t.sibling.return=t.return,t=t.sibling}a&4&&(a=l.updateQueue,a!==null&&(u=a.retryQueue,u!==null&&(a.retryQueue=null,Nn(l,u))));break;case 19:sl(t,l),bl(l),a&4&&(a=l.updateQueue,a!==null&&(l.updateQueue=null,Nn(l,a)));break;case 30:break;case 21:break;default:sl(t,l),bl(l)}}function bl(l){var t=l.flags;if(t&2){try{for(var u,a=l.return;a!==null;){if(Ev(a)){u=a;break}a=a.return}if(u==null)throw Error(b(160));switch(u.tag){case 27:var n=u.stateNode,e=Hf(l);de(l,e,n);break;case 5:var f=u.stateNode;u.flags&32&&(wu(f,""),u.flags&=-33);var c=Hf(l);de(l,c,f);break;case 3:case 4:var i=u.stateNode.containerInfo,m=Hf(l);oc(l,m,i);break;default:throw Error(b(161))}}catch(g){X(l,l.return,g)}l.flags&=-3}t&4096&&(l.flags&=-4097)}function Hv(l){if(l.subtreeFlags&1024)for(l=l.child;l!==null;){var t=l;Hv(t),t.tag===5&&t.flags&1024&&t.stateNode.reset(),l=l.sibling}}function et(l,t){if(t.subtreeFlags&8772)for(t=t.child;t!==null;)Av(l,t.alternate,t),t=t.sibling}function tu(l){for(l=l.child;l!==null;){var t=l;switch(t.tag){case 0:case 11:case 14:case 15:wt(4,t,t.return),tu(t);break;case 1:kl(t,t.return);var u=t.stateNode;typeof u.componentWillUnmount=="function"&&bv(t,t.return,u),tu(t);break;case 27:Xa(t.stateNode);case 26:case 5:kl(t,t.return),tu(t);break;case 22:t.memoizedState===null&&tu(t);break;case 30:tu(t);break;default:tu(t)}l=l.sibling}}function ft(l,t,u){for(u=u&&(t.subtreeFlags&8772)!==0,t=t.child;t!==null;){var a=t.alternate,n=l,e=t,f=e.flags;switch(e.tag){case 0:case 11:case 15:ft(n,e,u),fn(4,e);break;case 1:if(ft(n,e,u),a=e,n=a.stateNode,typeof n.componentDidMount=="function")try{n.componentDidMount()}catch(m){X(a,a.return,m)}if(a=e,n=a.updateQueue,n!==null){var c=a.stateNode;try{var i=n.shared.hiddenCallbacks;if(i!==null)for(n.shared.hiddenCallbacks=null,n=0;n<i.length;n++)My(i[n],c)}catch(m){X(a,a.return,m)}}u&&f&64&&sv(e),Ba(e,e.return);break;case 27:Tv(e);case 26:case 5:ft(n,e,u),u&&a===null&&f&4&&zv(e),Ba(e,e.return);break;case 12:ft(n,e,u);break;case 31:ft(n,e,u),u&&f&4&&Mv(n,e);break;case 13:ft(n,e,u),u&&f&4&&Dv(n,e);break;case 22:e.memoizedState===null&&ft(n,e,u),Ba(e,e.return);break;case 30:break;default:ft(n,e,u)}t=t.sibling}}function gi(l,t){var u=null;l!==null&&l.memoizedState!==null&&l.memoizedState.cachePool!==null&&(u=l.memoizedState.cachePool.pool),l=null,t.memoizedState!==null&&t.memoizedState.cachePool!==null&&(l=t.memoizedState.cachePool.pool),l!==u&&(l!=null&&l.refCount++,u!=null&&nn(u))}function oi(l,t){l=null,t.alternate!==null&&(l=t.alternate.memoizedState.cache),t=t.memoizedState.cache,t!==l&&(t.refCount++,l!=null&&nn(l))}function Jl(l,t,u,a){if(t.subtreeFlags&10256)for(t=t.child;t!==null;)Nv(l,t,u,a),t=t.sibling}function Nv(l,t,u,a){var n=t.flags;switch(t.tag){case 0:case 11:case 15:Jl(l,t,u,a),n&2048&&fn(9,t);break;case 1:Jl(l,t,u,a);break;case 3:Jl(l,t,u,a),n&2048&&(l=null,t.alternate!==null&&(l=t.alternate.memoizedState.cache),t=t.memoizedState.cache,t!==l&&(t.refCount++,l!=null&&nn(l)));break;case 12:if(n&2048){Jl(l,t,u,a),l=t.stateNode;try{var e=t.memoizedProps,f=e.id,c=e.onPostCommit;typeof c=="function"&&c(f,t.alternate===null?"mount":"update",l.passiveEffectDuration,-0)}catch(i){X(t,t.return,i)}}else Jl(l,t,u,a);break;case 31:Jl(l,t,u,a);break;case 13:Jl(l,t,u,a);break;case 23:break;case 22:e=t.stateNode,f=t.alternate,t.memoizedState!==null?e._visibility&2?Jl(l,t,u,a):Ya(l,t):e._visibility&2?Jl(l,t,u,a):(e._visibility|=2,_u(l,t,u,a,(t.subtreeFlags&10256)!==0||!1)),n&2048&&gi(f,t);break;case 24:Jl(l,t,u,a),n&2048&&oi(t.alternate,t);break;default:Jl(l,t,u,a)}}function _u(l,t,u,a,n){for(n=n&&((t.subtreeFlags&10256)!==0||!1),t=t.child;t!==null;){var e=l,f=t,c=u,i=a,m=f.flags;switch(f.tag){case 0:case 11:case 15:_u(e,f,c,i,n),fn(8,f);break;case 23:break;case 22:var g=f.stateNode;f.memoizedState!==null?g._visibility&2?_u(e,f,c,i,n):Ya(e,f):(g._visibility|=2,_u(e,f,c,i,n)),n&&m&2048&&gi(f.alternate,f);break;case 24:_u(e,f,c,i,n),n&&m&2048&&oi(f.alternate,f);break;default:_u(e,f,c,i,n)}t=t.sibling}}function Ya(l,t){if(t.subtreeFlags&10256)for(t=t.child;t!==null;){var u=l,a=t,n=a.flags;switch(a.tag){case 22:Ya(u,a),n&2048&&gi(a.alternate,a);break;case 24:Ya(u,a),n&2048&&oi(a.alternate,a);break;default:Ya(u,a)}t=t.sibling}}var _a=8192;function Ou(l,t,u){if(l.subtreeFlags&_a)for(l=l.child;l!==null;)pv(l,t,u),l=l.sibling}function pv(l,t,u){switch(l.tag){case 26:Ou(l,t,u),l.flags&_a&&l.memoizedState!==null&&v2(u,rl,l.memoizedState,l.memoizedProps);break;case 5:Ou(l,t,u);break;case 3:case 4:var a=rl;rl=Ee(l.stateNode.containerInfo),Ou(l,t,u),rl=a;break;case 22:l.memoizedState===null&&(a=l.alternate,a!==null&&a.memoizedState!==null?(a=_a,_a=16777216,Ou(l,t,u),_a=a):Ou(l,t,u));break;default:Ou(l,t,u)}}function qv(l){var t=l.alternate;if(t!==null&&(l=t.child,l!==null)){t.child=null;do t=l.sibling,l.sibling=null,l=t;while(l!==null)}}function sa(l){var t=l.deletions;if((l.flags&16)!==0){if(t!==null)for(var u=0;u<t.length;u++){var a=t[u];el=a,Bv(a,l)}qv(l)}if(l.subtreeFlags&10256)for(l=l.child;l!==null;)Rv(l),l=l.sibling}function Rv(l){switch(l.tag){case 0:case 11:case 15:sa(l),l.flags&2048&&wt(9,l,l.return);break;case 3:sa(l);break;case 12:sa(l);break;case 22:var t=l.stateNode;l.memoizedState!==null&&t._visibility&2&&(l.return===null||l.return.tag!==13)?(t._visibility&=-3,Jn(l)):sa(l);break;default:sa(l)}}function Jn(l){var t=l.deletions;if((l.flags&16)!==0){if(t!==null)for(var u=0;u<t.length;u++){var a=t[u];el=a,Bv(a,l)}qv(l)}for(l=l.child;l!==null;){switch(t=l,t.tag){case 0:case 11:case 15:wt(8,t,t.return),Jn(t);break;case 22:u=t.stateNode,u._visibility&2&&(u._visibility&=-3,Jn(t));break;default:Jn(t)}l=l.sibling}}function Bv(l,t){for(;el!==null;){var u=el;switch(u.tag){case 0:case 11:case 15:wt(8,u,t);break;case 23:case 22:if(u.memoizedState!==null&&u.memoizedState.cachePool!==null){var a=u.memoizedState.cachePool.pool;a!=null&&a.refCount++}break;case 24:nn(u.memoizedState.cache)}if(a=u.child,a!==null)a.return=u,el=a;else l:for(u=l;el!==null;){a=el;var n=a.sibling,e=a.return;if(Ov(a),a===u){el=null;break l}if(n!==null){n.return=e,el=n;break l}el=e}}}var Uh={getCacheForType:function(l){var t=ml(tl),u=t.data.get(l);return u===void 0&&(u=l(),t.data.set(l,u)),u},cacheSignal:function(){return ml(tl).controller.signal}},Hh=typeof WeakMap=="function"?WeakMap:Map,Y=0,V=null,H=null,p=0,G=0,_l=null,Bt=!1,fa=!1,si=!1,zt=0,F=0,Wt=0,fu=0,bi=0,Ul=0,ku=0,Ca=null,El=null,sc=!1,Ge=0,Yv=0,he=1/0,Se=null,jt=null,al=0,Vt=null,Iu=null,St=0,bc=0,zc=null,Cv=null,Ga=0,Ec=null;function ql(){return(Y&2)!==0&&p!==0?p&-p:O.T!==null?Ei():K1()}function Gv(){if(Ul===0)if((p&536870912)===0||q){var l=zn;zn<<=1,(zn&3932160)===0&&(zn=262144),Ul=l}else Ul=536870912;return l=Bl.current,l!==null&&(l.flags|=32),Ul}function Tl(l,t,u){(l===V&&(G===2||G===9)||l.cancelPendingCommit!==null)&&(Pu(l,0),Yt(l,p,Ul,!1)),tn(l,u),((Y&2)===0||l!==V)&&(l===V&&((Y&2)===0&&(fu|=u),F===4&&Yt(l,p,Ul,!1)),lt(l))}function Xv(l,t,u){if((Y&6)!==0)throw Error(b(327));var a=!u&&(t&127)===0&&(t&l.expiredLanes)===0||ln(l,t),n=a?qh(l,t):pf(l,t,!0),e=a;do{if(n===0){fa&&!a&&Yt(l,t,0,!1);break}else{if(u=l.current.alternate,e&&!Nh(u)){n=pf(l,t,!1),e=!1;continue}if(n===2){if(e=t,l.errorRecoveryDisabledLanes&e)var f=0;else f=l.pendingLanes&-536870913,f=f!==0?f:f&536870912?536870912:0;if(f!==0){t=f;l:{var c=l;n=Ca;var i=c.current.memoizedState.isDehydrated;if(i&&(Pu(c,f).flags|=256),f=pf(c,f,!1),f!==2){if(si&&!i){c.errorRecoveryDisabledLanes|=e,fu|=e,n=4;break l}e=El,El=n,e!==null&&(El===null?El=e:El.push.apply(El,e))}n=f}if(e=!1,n!==2)continue}}if(n===1){Pu(l,0),Yt(l,t,0,!0);break}l:{switch(a=l,e=n,e){case 0:case 1:throw Error(b(345));case 4:if((t&4194048)!==t)break;case 6:Yt(a,t,Ul,!Bt);break l;case 2:El=null;break;case 3:case 5:break;default:throw Error(b(329))}if((t&62914560)===t&&(n=Ge+300-Hl(),10<n)){if(Yt(a,t,Ul,!Bt),Me(a,0,!0)!==0)break l;St=t,a.timeoutHandle=am(t1.bind(null,a,u,El,Se,sc,t,Ul,fu,ku,Bt,e,"Throttled",-0,0),n);break l}t1(a,u,El,Se,sc,t,Ul,fu,ku,Bt,e,null,-0,0)}}break}while(!0);lt(l)}function t1(l,t,u,a,n,e,f,c,i,m,g,s,h,S){if(l.timeoutHandle=-1,s=t.subtreeFlags,s&8192||(s&16785408)===16785408){s={stylesheets:null,count:0,imgCount:0,imgBytes:0,suspenseyImages:[],waitingForImages:!0,waitingForViewTransition:!1,unsuspend:vt},pv(t,e,s);var z=(e&62914560)===e?Ge-Hl():(e&4194048)===e?Yv-Hl():0;if(z=m2(s,z),z!==null){St=e,l.cancelPendingCommit=z(a1.bind(null,l,t,e,u,a,n,f,c,i,g,s,null,h,S)),Yt(l,e,f,!m);return}}a1(l,t,e,u,a,n,f,c,i)}function Nh(l){for(var t=l;;){var u=t.tag;if((u===0||u===11||u===15)&&t.flags&16384&&(u=t.updateQueue,u!==null&&(u=u.stores,u!==null)))for(var a=0;a<u.length;a++){var n=u[a],e=n.getSnapshot;n=n.value;try{if(!Rl(e(),n))return!1}catch{return!1}}if(u=t.child,t.subtreeFlags&16384&&u!==null)u.return=t,t=u;else{if(t===l)break;for(;t.sibling===null;){if(t.return===null||t.return===l)return!0;t=t.return}t.sibling.return=t.return,t=t.sibling}}return!0}function Yt(l,t,u,a){t&=~bi,t&=~fu,l.suspendedLanes|=t,l.pingedLanes&=~t,a&&(l.warmLanes|=t),a=l.expirationTimes;for(var n=t;0<n;){var e=31-pl(n),f=1<<e;a[e]=-1,n&=~f}u!==0&&V1(l,u,t)}function Xe(){return(Y&6)===0?(cn(0,!1),!1):!0}function zi(){if(H!==null){if(G===0)var l=H.return;else l=H,mt=ou=null,ni(l),xu=null,Ka=0,l=H;for(;l!==null;)ov(l.alternate,l),l=l.return;H=null}}function Pu(l,t){var u=l.timeoutHandle;u!==-1&&(l.timeoutHandle=-1,wh(u)),u=l.cancelPendingCommit,u!==null&&(l.cancelPendingCommit=null,u()),St=0,zi(),V=l,H=u=dt(l.current,null),p=t,G=0,_l=null,Bt=!1,fa=ln(l,t),si=!1,ku=Ul=bi=fu=Wt=F=0,El=Ca=null,sc=!1,(t&8)!==0&&(t|=t&32);var a=l.entangledLanes;if(a!==0)for(l=l.entanglements,a&=t;0<a;){var n=31-pl(a),e=1<<n;t|=l[n],a&=~e}return zt=t,Ne(),u}function Qv(l,t){M=null,O.H=ra,t===ea||t===qe?(t=B0(),G=3):t===kc?(t=B0(),G=4):G=t===hi?8:t!==null&&typeof t=="object"&&typeof t.then=="function"?6:1,_l=t,H===null&&(F=1,ve(l,jl(t,l.current)))}function Zv(){var l=Bl.current;return l===null?!0:(p&4194048)===p?xl===null:(p&62914560)===p||(p&536870912)!==0?l===xl:!1}function jv(){var l=O.H;return O.H=ra,l===null?ra:l}function Vv(){var l=O.A;return O.A=Uh,l}function ge(){F=4,Bt||(p&4194048)!==p&&Bl.current!==null||(fa=!0),(Wt&134217727)===0&&(fu&134217727)===0||V===null||Yt(V,p,Ul,!1)}function pf(l,t,u){var a=Y;Y|=2;var n=jv(),e=Vv();(V!==l||p!==t)&&(Se=null,Pu(l,t)),t=!1;var f=F;l:do try{if(G!==0&&H!==null){var c=H,i=_l;switch(G){case 8:zi(),f=6;break l;case 3:case 2:case 9:case 6:Bl.current===null&&(t=!0);var m=G;if(G=0,_l=null,Xu(l,c,i,m),u&&fa){f=0;break l}break;default:m=G,G=0,_l=null,Xu(l,c,i,m)}}ph(),f=F;break}catch(g){Qv(l,g)}while(!0);return t&&l.shellSuspendCounter++,mt=ou=null,Y=a,O.H=n,O.A=e,H===null&&(V=null,p=0,Ne()),f}function ph(){for(;H!==null;)xv(H)}function qh(l,t){var u=Y;Y|=2;var a=jv(),n=Vv();V!==l||p!==t?(Se=null,he=Hl()+500,Pu(l,t)):fa=ln(l,t);l:do try{if(G!==0&&H!==null){t=H;var e=_l;t:switch(G){case 1:G=0,_l=null,Xu(l,t,e,1);break;case 2:case 9:if(R0(e)){G=0,_l=null,u1(t);break}t=function(){G!==2&&G!==9||V!==l||(G=7),lt(l)},e.then(t,t);break l;case 3:G=7;break l;case 4:G=5;break l;case 7:R0(e)?(G=0,_l=null,u1(t)):(G=0,_l=null,Xu(l,t,e,7));break;case 5:var f=null;switch(H.tag){case 26:f=H.memoizedState;case 5:case 27:var c=H;if(f?im(f):c.stateNode.complete){G=0,_l=null;var i=c.sibling;if(i!==null)H=i;else{var m=c.return;m!==null?(H=m,Qe(m)):H=null}break t}}G=0,_l=null,Xu(l,t,e,5);break;case 6:G=0,_l=null,Xu(l,t,e,6);break;case 8:zi(),F=6;break l;default:throw Error(b(462))}}Rh();break}catch(g){Qv(l,g)}while(!0);return mt=ou=null,O.H=a,O.A=n,Y=u,H!==null?0:(V=null,p=0,Ne(),F)}function Rh(){for(;H!==null&&!td();)xv(H)}function xv(l){var t=gv(l.alternate,l,zt);l.memoizedProps=l.pendingProps,t===null?Qe(l):H=t}function u1(l){var t=l,u=t.alternate;switch(t.tag){case 15:case 0:t=$0(u,t,t.pendingProps,t.type,void 0,p);break;case 11:t=$0(u,t,t.pendingProps,t.type.render,t.ref,p);break;case 5:ni(t);default:ov(u,t),t=H=oy(t,zt),t=gv(u,t,zt)}l.memoizedProps=l.pendingProps,t===null?Qe(l):H=t}function Xu(l,t,u,a){mt=ou=null,ni(t),xu=null,Ka=0;var n=t.return;try{if(Eh(l,n,t,u,p)){F=1,ve(l,jl(u,l.current)),H=null;return}}catch(e){if(n!==null)throw H=n,e;F=1,ve(l,jl(u,l.current)),H=null;return}t.flags&32768?(q||a===1?l=!0:fa||(p&536870912)!==0?l=!1:(Bt=l=!0,(a===2||a===9||a===3||a===6)&&(a=Bl.current,a!==null&&a.tag===13&&(a.flags|=16384))),Lv(t,l)):Qe(t)}function Qe(l){var t=l;do{if((t.flags&32768)!==0){Lv(t,Bt);return}l=t.return;var u=Oh(t.alternate,t,zt);if(u!==null){H=u;return}if(t=t.sibling,t!==null){H=t;return}H=t=l}while(t!==null);F===0&&(F=5)}function Lv(l,t){do{var u=_h(l.alternate,l);if(u!==null){u.flags&=32767,H=u;return}if(u=l.return,u!==null&&(u.flags|=32768,u.subtreeFlags=0,u.deletions=null),!t&&(l=l.sibling,l!==null)){H=l;return}H=l=u}while(l!==null);F=6,H=null}function a1(l,t,u,a,n,e,f,c,i){l.cancelPendingCommit=null;do Ze();while(al!==0);if((Y&6)!==0)throw Error(b(327));if(t!==null){if(t===l.current)throw Error(b(177));if(e=t.lanes|t.childLanes,e|=Kc,md(l,u,e,f,c,i),l===V&&(H=V=null,p=0),Iu=t,Vt=l,St=u,bc=e,zc=n,Cv=a,(t.subtreeFlags&10256)!==0||(t.flags&10256)!==0?(l.callbackNode=null,l.callbackPriority=0,Gh(Pn,function(){return Wv(),null})):(l.callbackNode=null,l.callbackPriority=0),a=(t.flags&13878)!==0,(t.subtreeFlags&13878)!==0||a){a=O.T,O.T=null,n=C.p,C.p=2,f=Y,Y|=4;try{Mh(l,t,u)}finally{Y=f,C.p=n,O.T=a}}al=1,Kv(),Jv(),rv()}}function Kv(){if(al===1){al=0;var l=Vt,t=Iu,u=(t.flags&13878)!==0;if((t.subtreeFlags&13878)!==0||u){u=O.T,O.T=null;var a=C.p;C.p=2;var n=Y;Y|=4;try{Uv(t,l);var e=_c,f=iy(l.containerInfo),c=e.focusedElem,i=e.selectionRange;if(f!==c&&c&&c.ownerDocument&&cy(c.ownerDocument.documentElement,c)){if(i!==null&&Lc(c)){var m=i.start,g=i.end;if(g===void 0&&(g=m),"selectionStart"in c)c.selectionStart=m,c.selectionEnd=Math.min(g,c.value.length);else{var s=c.ownerDocument||document,h=s&&s.defaultView||window;if(h.getSelection){var S=h.getSelection(),z=c.textContent.length,A=Math.min(i.start,z),Q=i.end===void 0?A:Math.min(i.end,z);!S.extend&&A>Q&&(f=Q,Q=A,A=f);var v=M0(c,A),y=M0(c,Q);if(v&&y&&(S.rangeCount!==1||S.anchorNode!==v.node||S.anchorOffset!==v.offset||S.focusNode!==y.node||S.focusOffset!==y.offset)){var d=s.createRange();d.setStart(v.node,v.offset),S.removeAllRanges(),A>Q?(S.addRange(d),S.extend(y.node,y.offset)):(d.setEnd(y.node,y.offset),S.addRange(d))}}}}for(s=[],S=c;S=S.parentNode;)S.nodeType===1&&s.push({element:S,left:S.scrollLeft,top:S.scrollTop});for(typeof c.focus=="function"&&c.focus(),c=0;c<s.length;c++){var o=s[c];o.element.scrollLeft=o.left,o.element.scrollTop=o.top}}Oe=!!Oc,_c=Oc=null}finally{Y=n,C.p=a,O.T=u}}l.current=t,al=2}}function Jv(){if(al===2){al=0;var l=Vt,t=Iu,u=(t.flags&8772)!==0;if((t.subtreeFlags&8772)!==0||u){u=O.T,O.T=null;var a=C.p;C.p=2;var n=Y;Y|=4;try{Av(l,t.alternate,t)}finally{Y=n,C.p=a,O.T=u}}al=3}}function rv(){if(al===4||al===3){al=0,ud();var l=Vt,t=Iu,u=St,a=Cv;(t.subtreeFlags&10256)!==0||(t.flags&10256)!==0?al=5:(al=0,Iu=Vt=null,wv(l,l.pendingLanes));var n=l.pendingLanes;if(n===0&&(jt=null),Gc(u),t=t.stateNode,Nl&&typeof Nl.onCommitFiberRoot=="function")try{Nl.onCommitFiberRoot(Pa,t,void 0,(t.current.flags&128)===128)}catch{}if(a!==null){t=O.T,n=C.p,C.p=2,O.T=null;try{for(var e=l.onRecoverableError,f=0;f<a.length;f++){var c=a[f];e(c.value,{componentStack:c.stack})}}finally{O.T=t,C.p=n}}(St&3)!==0&&Ze(),lt(l),n=l.pendingLanes,(u&261930)!==0&&(n&42)!==0?l===Ec?Ga++:(Ga=0,Ec=l):Ga=0,cn(0,!1)}}function wv(l,t){(l.pooledCacheLanes&=t)===0&&(t=l.pooledCache,t!=null&&(l.pooledCache=null,nn(t)))}function Ze(){return Kv(),Jv(),rv(),Wv()}function Wv(){if(al!==5)return!1;var l=Vt,t=bc;bc=0;var u=Gc(St),a=O.T,n=C.p;try{C.p=32>u?32:u,O.T=null,u=zc,zc=null;var e=Vt,f=St;if(al=0,Iu=Vt=null,St=0,(Y&6)!==0)throw Error(b(331));var c=Y;if(Y|=4,Rv(e.current),Nv(e,e.current,f,u),Y=c,cn(0,!1),Nl&&typeof Nl.onPostCommitFiberRoot=="function")try{Nl.onPostCommitFiberRoot(Pa,e)}catch{}return!0}finally{C.p=n,O.T=a,wv(l,t)}}function n1(l,t,u){t=jl(u,t),t=hc(l.stateNode,t,2),l=Zt(l,t,2),l!==null&&(tn(l,2),lt(l))}function X(l,t,u){if(l.tag===3)n1(l,l,u);else for(;t!==null;){if(t.tag===3){n1(t,l,u);break}else if(t.tag===1){var a=t.stateNode;if(typeof t.type.getDerivedStateFromError=="function"||typeof a.componentDidCatch=="function"&&(jt===null||!jt.has(a))){l=jl(u,l),u=yv(2),a=Zt(t,u,2),a!==null&&(vv(u,a,t,l),tn(a,2),lt(a));break}}t=t.return}}function qf(l,t,u){var a=l.pingCache;if(a===null){a=l.pingCache=new Hh;var n=new Set;a.set(t,n)}else n=a.get(t),n===void 0&&(n=new Set,a.set(t,n));n.has(u)||(si=!0,n.add(u),l=Bh.bind(null,l,t,u),t.then(l,l))}function Bh(l,t,u){var a=l.pingCache;a!==null&&a.delete(t),l.pingedLanes|=l.suspendedLanes&u,l.warmLanes&=~u,V===l&&(p&u)===u&&(F===4||F===3&&(p&62914560)===p&&300>Hl()-Ge?(Y&2)===0&&Pu(l,0):bi|=u,ku===p&&(ku=0)),lt(l)}function $v(l,t){t===0&&(t=j1()),l=gu(l,t),l!==null&&(tn(l,t),lt(l))}function Yh(l){var t=l.memoizedState,u=0;t!==null&&(u=t.retryLane),$v(l,u)}function Ch(l,t){var u=0;switch(l.tag){case 31:case 13:var a=l.stateNode,n=l.memoizedState;n!==null&&(u=n.retryLane);break;case 19:a=l.stateNode;break;case 22:a=l.stateNode._retryCache;break;default:throw Error(b(314))}a!==null&&a.delete(t),$v(l,u)}function Gh(l,t){return Yc(l,t)}var oe=null,Mu=null,Tc=!1,se=!1,Rf=!1,Ct=0;function lt(l){l!==Mu&&l.next===null&&(Mu===null?oe=Mu=l:Mu=Mu.next=l),se=!0,Tc||(Tc=!0,Qh())}function cn(l,t){if(!Rf&&se){Rf=!0;do for(var u=!1,a=oe;a!==null;){if(!t)if(l!==0){var n=a.pendingLanes;if(n===0)var e=0;else{var f=a.suspendedLanes,c=a.pingedLanes;e=(1<<31-pl(42|l)+1)-1,e&=n&~(f&~c),e=e&201326741?e&201326741|1:e?e|2:0}e!==0&&(u=!0,e1(a,e))}else e=p,e=Me(a,a===V?e:0,a.cancelPendingCommit!==null||a.timeoutHandle!==-1),(e&3)===0||ln(a,e)||(u=!0,e1(a,e));a=a.next}while(u);Rf=!1}}function Xh(){Fv()}function Fv(){se=Tc=!1;var l=0;Ct!==0&&rh()&&(l=Ct);for(var t=Hl(),u=null,a=oe;a!==null;){var n=a.next,e=kv(a,t);e===0?(a.next=null,u===null?oe=n:u.next=n,n===null&&(Mu=u)):(u=a,(l!==0||(e&3)!==0)&&(se=!0)),a=n}al!==0&&al!==5||cn(l,!1),Ct!==0&&(Ct=0)}function kv(l,t){for(var u=l.suspendedLanes,a=l.pingedLanes,n=l.expirationTimes,e=l.pendingLanes&-62914561;0<e;){var f=31-pl(e),c=1<<f,i=n[f];i===-1?((c&u)===0||(c&a)!==0)&&(n[f]=vd(c,t)):i<=t&&(l.expiredLanes|=c),e&=~c}if(t=V,u=p,u=Me(l,l===t?u:0,l.cancelPendingCommit!==null||l.timeoutHandle!==-1),a=l.callbackNode,u===0||l===t&&(G===2||G===9)||l.cancelPendingCommit!==null)return a!==null&&a!==null&&ff(a),l.callbackNode=null,l.callbackPriority=0;if((u&3)===0||ln(l,u)){if(t=u&-u,t===l.callbackPriority)return t;switch(a!==null&&ff(a),Gc(u)){case 2:case 8:u=Q1;break;case 32:u=Pn;break;case 268435456:u=Z1;break;default:u=Pn}return a=Iv.bind(null,l),u=Yc(u,a),l.callbackPriority=t,l.callbackNode=u,t}return a!==null&&a!==null&&ff(a),l.callbackPriority=2,l.callbackNode=null,2}function Iv(l,t){if(al!==0&&al!==5)return l.callbackNode=null,l.callbackPriority=0,null;var u=l.callbackNode;if(Ze()&&l.callbackNode!==u)return null;var a=p;return a=Me(l,l===V?a:0,l.cancelPendingCommit!==null||l.timeoutHandle!==-1),a===0?null:(Xv(l,a,t),kv(l,Hl()),l.callbackNode!=null&&l.callbackNode===u?Iv.bind(null,l):null)}function e1(l,t){if(Ze())return null;Xv(l,t,!0)}function Qh(){Wh(function(){(Y&6)!==0?Yc(X1,Xh):Fv()})}function Ei(){if(Ct===0){var l=Wu;l===0&&(l=bn,bn<<=1,(bn&261888)===0&&(bn=256)),Ct=l}return Ct}function f1(l){return l==null||typeof l=="symbol"||typeof l=="boolean"?null:typeof l=="function"?l:Gn(""+l)}function c1(l,t){var u=t.ownerDocument.createElement("input");return u.name=t.name,u.value=t.value,l.id&&u.setAttribute("form",l.id),t.parentNode.insertBefore(u,t),l=new FormData(l),u.parentNode.removeChild(u),l}function Zh(l,t,u,a,n){if(t==="submit"&&u&&u.stateNode===n){var e=f1((n[Al]||null).action),f=a.submitter;f&&(t=(t=f[Al]||null)?f1(t.formAction):f.getAttribute("formAction"),t!==null&&(e=t,f=null));var c=new De("action","action",null,a,n);l.push({event:c,listeners:[{instance:null,listener:function(){if(a.defaultPrevented){if(Ct!==0){var i=f?c1(n,f):new FormData(n);mc(u,{pending:!0,data:i,method:n.method,action:e},null,i)}}else typeof e=="function"&&(c.preventDefault(),i=f?c1(n,f):new FormData(n),mc(u,{pending:!0,data:i,method:n.method,action:e},e,i))},currentTarget:n}]})}}for(pn=0;pn<Pf.length;pn++)qn=Pf[pn],i1=qn.toLowerCase(),y1=qn[0].toUpperCase()+qn.slice(1),wl(i1,"on"+y1);var qn,i1,y1,pn;wl(vy,"onAnimationEnd");wl(my,"onAnimationIteration");wl(dy,"onAnimationStart");wl("dblclick","onDoubleClick");wl("focusin","onFocus");wl("focusout","onBlur");wl(ah,"onTransitionRun");wl(nh,"onTransitionStart");wl(eh,"onTransitionCancel");wl(hy,"onTransitionEnd");ru("onMouseEnter",["mouseout","mouseover"]);ru("onMouseLeave",["mouseout","mouseover"]);ru("onPointerEnter",["pointerout","pointerover"]);ru("onPointerLeave",["pointerout","pointerover"]);du("onChange","change click focusin focusout input keydown keyup selectionchange".split(" "));du("onSelect","focusout contextmenu dragend focusin keydown keyup mousedown mouseup selectionchange".split(" "));du("onBeforeInput",["compositionend","keypress","textInput","paste"]);du("onCompositionEnd","compositionend focusout keydown keypress keyup mousedown".split(" "));du("onCompositionStart","compositionstart focusout keydown keypress keyup mousedown".split(" "));du("onCompositionUpdate","compositionupdate focusout keydown keypress keyup mousedown".split(" "));var wa="abort canplay canplaythrough durationchange emptied encrypted ended error loadeddata loadedmetadata loadstart pause play playing progress ratechange resize seeked seeking stalled suspend timeupdate volumechange waiting".split(" "),jh=new Set("beforetoggle cancel close invalid load scroll scrollend toggle".split(" ").concat(wa));function Pv(l,t){t=(t&4)!==0;for(var u=0;u<l.length;u++){var a=l[u],n=a.event;a=a.listeners;l:{var e=void 0;if(t)for(var f=a.length-1;0<=f;f--){var c=a[f],i=c.instance,m=c.currentTarget;if(c=c.listener,i!==e&&n.isPropagationStopped())break l;e=c,n.currentTarget=m;try{e(n)}catch(g){te(g)}n.currentTarget=null,e=i}else for(f=0;f<a.length;f++){if(c=a[f],i=c.instance,m=c.currentTarget,c=c.listener,i!==e&&n.isPropagationStopped())break l;e=c,n.currentTarget=m;try{e(n)}catch(g){te(g)}n.currentTarget=null,e=i}}}}function U(l,t){var u=t[Jf];u===void 0&&(u=t[Jf]=new Set);var a=l+"__bubble";u.has(a)||(lm(t,l,2,!1),u.add(a))}function Bf(l,t,u){var a=0;t&&(a|=4),lm(u,l,a,t)}var Rn="_reactListening"+Math.random().toString(36).slice(2);function Ti(l){if(!l[Rn]){l[Rn]=!0,J1.forEach(function(u){u!=="selectionchange"&&(jh.has(u)||Bf(u,!1,l),Bf(u,!0,l))});var t=l.nodeType===9?l:l.ownerDocument;t===null||t[Rn]||(t[Rn]=!0,Bf("selectionchange",!1,t))}}function lm(l,t,u,a){switch(hm(t)){case 2:var n=S2;break;case 8:n=g2;break;default:n=Mi}u=n.bind(null,t,u,l),n=void 0,!Ff||t!=="touchstart"&&t!=="touchmove"&&t!=="wheel"||(n=!0),a?n!==void 0?l.addEventListener(t,u,{capture:!0,passive:n}):l.addEventListener(t,u,!0):n!==void 0?l.addEventListener(t,u,{passive:n}):l.addEventListener(t,u,!1)}function Yf(l,t,u,a,n){var e=a;if((t&1)===0&&(t&2)===0&&a!==null)l:for(;;){if(a===null)return;var f=a.tag;if(f===3||f===4){var c=a.stateNode.containerInfo;if(c===n)break;if(f===4)for(f=a.return;f!==null;){var i=f.tag;if((i===3||i===4)&&f.stateNode.containerInfo===n)return;f=f.return}for(;c!==null;){if(f=Hu(c),f===null)return;if(i=f.tag,i===5||i===6||i===26||i===27){a=e=f;continue l}c=c.parentNode}}a=a.return}P1(function(){var m=e,g=Zc(u),s=[];l:{var h=Sy.get(l);if(h!==void 0){var S=De,z=l;switch(l){case"keypress":if(Qn(u)===0)break l;case"keydown":case"keyup":S=Cd;break;case"focusin":z="focus",S=df;break;case"focusout":z="blur",S=df;break;case"beforeblur":case"afterblur":S=df;break;case"click":if(u.button===2)break l;case"auxclick":case"dblclick":case"mousedown":case"mousemove":case"mouseup":case"mouseout":case"mouseover":case"contextmenu":S=o0;break;case"drag":case"dragend":case"dragenter":case"dragexit":case"dragleave":case"dragover":case"dragstart":case"drop":S=Od;break;case"touchcancel":case"touchend":case"touchmove":case"touchstart":S=Qd;break;case vy:case my:case dy:S=Dd;break;case hy:S=jd;break;case"scroll":case"scrollend":S=Td;break;case"wheel":S=xd;break;case"copy":case"cut":case"paste":S=Hd;break;case"gotpointercapture":case"lostpointercapture":case"pointercancel":case"pointerdown":case"pointermove":case"pointerout":case"pointerover":case"pointerup":S=b0;break;case"toggle":case"beforetoggle":S=Kd}var A=(t&4)!==0,Q=!A&&(l==="scroll"||l==="scrollend"),v=A?h!==null?h+"Capture":null:h;A=[];for(var y=m,d;y!==null;){var o=y;if(d=o.stateNode,o=o.tag,o!==5&&o!==26&&o!==27||d===null||v===null||(o=Za(y,v),o!=null&&A.push(Wa(y,o,d))),Q)break;y=y.return}0<A.length&&(h=new S(h,z,null,u,g),s.push({event:h,listeners:A}))}}if((t&7)===0){l:{if(h=l==="mouseover"||l==="pointerover",S=l==="mouseout"||l==="pointerout",h&&u!==$f&&(z=u.relatedTarget||u.fromElement)&&(Hu(z)||z[ua]))break l;if((S||h)&&(h=g.window===g?g:(h=g.ownerDocument)?h.defaultView||h.parentWindow:window,S?(z=u.relatedTarget||u.toElement,S=m,z=z?Hu(z):null,z!==null&&(Q=Ia(z),A=z.tag,z!==Q||A!==5&&A!==27&&A!==6)&&(z=null)):(S=null,z=m),S!==z)){if(A=o0,o="onMouseLeave",v="onMouseEnter",y="mouse",(l==="pointerout"||l==="pointerover")&&(A=b0,o="onPointerLeave",v="onPointerEnter",y="pointer"),Q=S==null?h:Aa(S),d=z==null?h:Aa(z),h=new A(o,y+"leave",S,u,g),h.target=Q,h.relatedTarget=d,o=null,Hu(g)===m&&(A=new A(v,y+"enter",z,u,g),A.target=d,A.relatedTarget=Q,o=A),Q=o,S&&z)t:{for(A=Vh,v=S,y=z,d=0,o=v;o;o=A(o))d++;o=0;for(var T=y;T;T=A(T))o++;for(;0<d-o;)v=A(v),d--;for(;0<o-d;)y=A(y),o--;for(;d--;){if(v===y||y!==null&&v===y.alternate){A=v;break t}v=A(v),y=A(y)}A=null}else A=null;S!==null&&v1(s,h,S,A,!1),z!==null&&Q!==null&&v1(s,Q,z,A,!0)}}l:{if(h=m?Aa(m):window,S=h.nodeName&&h.nodeName.toLowerCase(),S==="select"||S==="input"&&h.type==="file")var R=A0;else if(T0(h))if(ey)R=lh;else{R=Id;var E=kd}else S=h.nodeName,!S||S.toLowerCase()!=="input"||h.type!=="checkbox"&&h.type!=="radio"?m&&Qc(m.elementType)&&(R=A0):R=Pd;if(R&&(R=R(l,m))){ny(s,R,u,g);break l}E&&E(l,h,m),l==="focusout"&&m&&h.type==="number"&&m.memoizedProps.value!=null&&Wf(h,"number",h.value)}switch(E=m?Aa(m):window,l){case"focusin":(T0(E)||E.contentEditable==="true")&&(qu=E,kf=m,Ua=null);break;case"focusout":Ua=kf=qu=null;break;case"mousedown":If=!0;break;case"contextmenu":case"mouseup":case"dragend":If=!1,D0(s,u,g);break;case"selectionchange":if(uh)break;case"keydown":case"keyup":D0(s,u,g)}var D;if(xc)l:{switch(l){case"compositionstart":var N="onCompositionStart";break l;case"compositionend":N="onCompositionEnd";break l;case"compositionupdate":N="onCompositionUpdate";break l}N=void 0}else pu?uy(l,u)&&(N="onCompositionEnd"):l==="keydown"&&u.keyCode===229&&(N="onCompositionStart");N&&(ty&&u.locale!=="ko"&&(pu||N!=="onCompositionStart"?N==="onCompositionEnd"&&pu&&(D=ly()):(Rt=g,jc="value"in Rt?Rt.value:Rt.textContent,pu=!0)),E=be(m,N),0<E.length&&(N=new s0(N,l,null,u,g),s.push({event:N,listeners:E}),D?N.data=D:(D=ay(u),D!==null&&(N.data=D)))),(D=rd?wd(l,u):Wd(l,u))&&(N=be(m,"onBeforeInput"),0<N.length&&(E=new s0("onBeforeInput","beforeinput",null,u,g),s.push({event:E,listeners:N}),E.data=D)),Zh(s,l,m,u,g)}Pv(s,t)})}function Wa(l,t,u){return{instance:l,listener:t,currentTarget:u}}function be(l,t){for(var u=t+"Capture",a=[];l!==null;){var n=l,e=n.stateNode;if(n=n.tag,n!==5&&n!==26&&n!==27||e===null||(n=Za(l,u),n!=null&&a.unshift(Wa(l,n,e)),n=Za(l,t),n!=null&&a.push(Wa(l,n,e))),l.tag===3)return a;l=l.return}return[]}function Vh(l){if(l===null)return null;do l=l.return;while(l&&l.tag!==5&&l.tag!==27);return l||null}function v1(l,t,u,a,n){for(var e=t._reactName,f=[];u!==null&&u!==a;){var c=u,i=c.alternate,m=c.stateNode;if(c=c.tag,i!==null&&i===a)break;c!==5&&c!==26&&c!==27||m===null||(i=m,n?(m=Za(u,e),m!=null&&f.unshift(Wa(u,m,i))):n||(m=Za(u,e),m!=null&&f.push(Wa(u,m,i)))),u=u.return}f.length!==0&&l.push({event:t,listeners:f})}var xh=/\r\n?/g,Lh=/\u0000|\uFFFD/g;function m1(l){return(typeof l=="string"?l:""+l).replace(xh,`
`).replace(Lh,"")}function tm(l,t){return t=m1(t),m1(l)===t}function Z(l,t,u,a,n,e){switch(u){case"children":typeof a=="string"?t==="body"||t==="textarea"&&a===""||wu(l,a):(typeof a=="number"||typeof a=="bigint")&&t!=="body"&&wu(l,""+a);break;case"className":Tn(l,"class",a);break;case"tabIndex":Tn(l,"tabindex",a);break;case"dir":case"role":case"viewBox":case"width":case"height":Tn(l,u,a);break;case"style":I1(l,a,e);break;case"data":if(t!=="object"){Tn(l,"data",a);break}case"src":case"href":if(a===""&&(t!=="a"||u!=="href")){l.removeAttribute(u);break}if(a==null||typeof a=="function"||typeof a=="symbol"||typeof a=="boolean"){l.removeAttribute(u);break}a=Gn(""+a),l.setAttribute(u,a);break;case"action":case"formAction":if(typeof a=="function"){l.setAttribute(u,"javascript:throw new Error('A React form was unexpectedly submitted. If you called form.submit() manually, consider using form.requestSubmit() instead. If you\\'re trying to use event.stopPropagation() in a submit event handler, consider also calling event.preventDefault().')");break}else typeof e=="function"&&(u==="formAction"?(t!=="input"&&Z(l,t,"name",n.name,n,null),Z(l,t,"formEncType",n.formEncType,n,null),Z(l,t,"formMethod",n.formMethod,n,null),Z(l,t,"formTarget",n.formTarget,n,null)):(Z(l,t,"encType",n.encType,n,null),Z(l,t,"method",n.method,n,null),Z(l,t,"target",n.target,n,null)));if(a==null||typeof a=="symbol"||typeof a=="boolean"){l.removeAttribute(u);break}a=Gn(""+a),l.setAttribute(u,a);break;case"onClick":a!=null&&(l.onclick=vt);break;case"onScroll":a!=null&&U("scroll",l);break;case"onScrollEnd":a!=null&&U("scrollend",l);break;case"dangerouslySetInnerHTML":if(a!=null){if(typeof a!="object"||!("__html"in a))throw Error(b(61));if(u=a.__html,u!=null){if(n.children!=null)throw Error(b(60));l.innerHTML=u}}break;case"multiple":l.multiple=a&&typeof a!="function"&&typeof a!="symbol";break;case"muted":l.muted=a&&typeof a!="function"&&typeof a!="symbol";break;case"suppressContentEditableWarning":case"suppressHydrationWarning":case"defaultValue":case"defaultChecked":case"innerHTML":case"ref":break;case"autoFocus":break;case"xlinkHref":if(a==null||typeof a=="function"||typeof a=="boolean"||typeof a=="symbol"){l.removeAttribute("xlink:href");break}u=Gn(""+a),l.setAttributeNS("http://www.w3.org/1999/xlink","xlink:href",u);break;case"contentEditable":case"spellCheck":case"draggable":case"value":case"autoReverse":case"externalResourcesRequired":case"focusable":case"preserveAlpha":a!=null&&typeof a!="function"&&typeof a!="symbol"?l.setAttribute(u,""+a):l.removeAttribute(u);break;case"inert":case"allowFullScreen":case"async":case"autoPlay":case"controls":case"default":case"defer":case"disabled":case"disablePictureInPicture":case"disableRemotePlayback":case"formNoValidate":case"hidden":case"loop":case"noModule":case"noValidate":case"open":case"playsInline":case"readOnly":case"required":case"reversed":case"scoped":case"seamless":case"itemScope":a&&typeof a!="function"&&typeof a!="symbol"?l.setAttribute(u,""):l.removeAttribute(u);break;case"capture":case"download":a===!0?l.setAttribute(u,""):a!==!1&&a!=null&&typeof a!="function"&&typeof a!="symbol"?l.setAttribute(u,a):l.removeAttribute(u);break;case"cols":case"rows":case"size":case"span":a!=null&&typeof a!="function"&&typeof a!="symbol"&&!isNaN(a)&&1<=a?l.setAttribute(u,a):l.removeAttribute(u);break;case"rowSpan":case"start":a==null||typeof a=="function"||typeof a=="symbol"||isNaN(a)?l.removeAttribute(u):l.setAttribute(u,a);break;case"popover":U("beforetoggle",l),U("toggle",l),Cn(l,"popover",a);break;case"xlinkActuate":ut(l,"http://www.w3.org/1999/xlink","xlink:actuate",a);break;case"xlinkArcrole":ut(l,"http://www.w3.org/1999/xlink","xlink:arcrole",a);break;case"xlinkRole":ut(l,"http://www.w3.org/1999/xlink","xlink:role",a);break;case"xlinkShow":ut(l,"http://www.w3.org/1999/xlink","xlink:show",a);break;case"xlinkTitle":ut(l,"http://www.w3.org/1999/xlink","xlink:title",a);break;case"xlinkType":ut(l,"http://www.w3.org/1999/xlink","xlink:type",a);break;case"xmlBase":ut(l,"http://www.w3.org/XML/1998/namespace","xml:base",a);break;case"xmlLang":ut(l,"http://www.w3.org/XML/1998/namespace","xml:lang",a);break;case"xmlSpace":ut(l,"http://www.w3.org/XML/1998/namespace","xml:space",a);break;case"is":Cn(l,"is",a);break;case"innerText":case"textContent":break;default:(!(2<u.length)||u[0]!=="o"&&u[0]!=="O"||u[1]!=="n"&&u[1]!=="N")&&(u=zd.get(u)||u,Cn(l,u,a))}}function Ac(l,t,u,a,n,e){switch(u){case"style":I1(l,a,e);break;case"dangerouslySetInnerHTML":if(a!=null){if(typeof a!="object"||!("__html"in a))throw Error(b(61));if(u=a.__html,u!=null){if(n.children!=null)throw Error(b(60));l.innerHTML=u}}break;case"children":typeof a=="string"?wu(l,a):(typeof a=="number"||typeof a=="bigint")&&wu(l,""+a);break;case"onScroll":a!=null&&U("scroll",l);break;case"onScrollEnd":a!=null&&U("scrollend",l);break;case"onClick":a!=null&&(l.onclick=vt);break;case"suppressContentEditableWarning":case"suppressHydrationWarning":case"innerHTML":case"ref":break;case"innerText":case"textContent":break;default:if(!r1.hasOwnProperty(u))l:{if(u[0]==="o"&&u[1]==="n"&&(n=u.endsWith("Capture"),t=u.slice(2,n?u.length-7:void 0),e=l[Al]||null,e=e!=null?e[u]:null,typeof e=="function"&&l.removeEventListener(t,e,n),typeof a=="function")){typeof e!="function"&&e!==null&&(u in l?l[u]=null:l.hasAttribute(u)&&l.removeAttribute(u)),l.addEventListener(t,a,n);break l}u in l?l[u]=a:a===!0?l.setAttribute(u,""):Cn(l,u,a)}}}function dl(l,t,u){switch(t){case"div":case"span":case"svg":case"path":case"a":case"g":case"p":case"li":break;case"img":U("error",l),U("load",l);var a=!1,n=!1,e;for(e in u)if(u.hasOwnProperty(e)){var f=u[e];if(f!=null)switch(e){case"src":a=!0;break;case"srcSet":n=!0;break;case"children":case"dangerouslySetInnerHTML":throw Error(b(137,t));default:Z(l,t,e,f,u,null)}}n&&Z(l,t,"srcSet",u.srcSet,u,null),a&&Z(l,t,"src",u.src,u,null);return;case"input":U("invalid",l);var c=e=f=n=null,i=null,m=null;for(a in u)if(u.hasOwnProperty(a)){var g=u[a];if(g!=null)switch(a){case"name":n=g;break;case"type":f=g;break;case"checked":i=g;break;case"defaultChecked":m=g;break;case"value":e=g;break;case"defaultValue":c=g;break;case"children":case"dangerouslySetInnerHTML":if(g!=null)throw Error(b(137,t));break;default:Z(l,t,a,g,u,null)}}$1(l,e,c,i,m,f,n,!1);return;case"select":U("invalid",l),a=f=e=null;for(n in u)if(u.hasOwnProperty(n)&&(c=u[n],c!=null))switch(n){case"value":e=c;break;case"defaultValue":f=c;break;case"multiple":a=c;default:Z(l,t,n,c,u,null)}t=e,u=f,l.multiple=!!a,t!=null?Zu(l,!!a,t,!1):u!=null&&Zu(l,!!a,u,!0);return;case"textarea":U("invalid",l),e=n=a=null;for(f in u)if(u.hasOwnProperty(f)&&(c=u[f],c!=null))switch(f){case"value":a=c;break;case"defaultValue":n=c;break;case"children":e=c;break;case"dangerouslySetInnerHTML":if(c!=null)throw Error(b(91));break;default:Z(l,t,f,c,u,null)}k1(l,a,n,e);return;case"option":for(i in u)u.hasOwnProperty(i)&&(a=u[i],a!=null)&&(i==="selected"?l.selected=a&&typeof a!="function"&&typeof a!="symbol":Z(l,t,i,a,u,null));return;case"dialog":U("beforetoggle",l),U("toggle",l),U("cancel",l),U("close",l);break;case"iframe":case"object":U("load",l);break;case"video":case"audio":for(a=0;a<wa.length;a++)U(wa[a],l);break;case"image":U("error",l),U("load",l);break;case"details":U("toggle",l);break;case"embed":case"source":case"link":U("error",l),U("load",l);case"area":case"base":case"br":case"col":case"hr":case"keygen":case"meta":case"param":case"track":case"wbr":case"menuitem":for(m in u)if(u.hasOwnProperty(m)&&(a=u[m],a!=null))switch(m){case"children":case"dangerouslySetInnerHTML":throw Error(b(137,t));default:Z(l,t,m,a,u,null)}return;default:if(Qc(t)){for(g in u)u.hasOwnProperty(g)&&(a=u[g],a!==void 0&&Ac(l,t,g,a,u,void 0));return}}for(c in u)u.hasOwnProperty(c)&&(a=u[c],a!=null&&Z(l,t,c,a,u,null))}function Kh(l,t,u,a){switch(t){case"div":case"span":case"svg":case"path":case"a":case"g":case"p":case"li":break;case"input":var n=null,e=null,f=null,c=null,i=null,m=null,g=null;for(S in u){var s=u[S];if(u.hasOwnProperty(S)&&s!=null)switch(S){case"checked":break;case"value":break;case"defaultValue":i=s;default:a.hasOwnProperty(S)||Z(l,t,S,null,a,s)}}for(var h in a){var S=a[h];if(s=u[h],a.hasOwnProperty(h)&&(S!=null||s!=null))switch(h){case"type":e=S;break;case"name":n=S;break;case"checked":m=S;break;case"defaultChecked":g=S;break;case"value":f=S;break;case"defaultValue":c=S;break;case"children":case"dangerouslySetInnerHTML":if(S!=null)throw Error(b(137,t));break;default:S!==s&&Z(l,t,h,S,a,s)}}wf(l,f,c,i,m,g,e,n);return;case"select":S=f=c=h=null;for(e in u)if(i=u[e],u.hasOwnProperty(e)&&i!=null)switch(e){case"value":break;case"multiple":S=i;default:a.hasOwnProperty(e)||Z(l,t,e,null,a,i)}for(n in a)if(e=a[n],i=u[n],a.hasOwnProperty(n)&&(e!=null||i!=null))switch(n){case"value":h=e;break;case"defaultValue":c=e;break;case"multiple":f=e;default:e!==i&&Z(l,t,n,e,a,i)}t=c,u=f,a=S,h!=null?Zu(l,!!u,h,!1):!!a!=!!u&&(t!=null?Zu(l,!!u,t,!0):Zu(l,!!u,u?[]:"",!1));return;case"textarea":S=h=null;for(c in u)if(n=u[c],u.hasOwnProperty(c)&&n!=null&&!a.hasOwnProperty(c))switch(c){case"value":break;case"children":break;default:Z(l,t,c,null,a,n)}for(f in a)if(n=a[f],e=u[f],a.hasOwnProperty(f)&&(n!=null||e!=null))switch(f){case"value":h=n;break;case"defaultValue":S=n;break;case"children":break;case"dangerouslySetInnerHTML":if(n!=null)throw Error(b(91));break;default:n!==e&&Z(l,t,f,n,a,e)}F1(l,h,S);return;case"option":for(var z in u)h=u[z],u.hasOwnProperty(z)&&h!=null&&!a.hasOwnProperty(z)&&(z==="selected"?l.selected=!1:Z(l,t,z,null,a,h));for(i in a)h=a[i],S=u[i],a.hasOwnProperty(i)&&h!==S&&(h!=null||S!=null)&&(i==="selected"?l.selected=h&&typeof h!="function"&&typeof h!="symbol":Z(l,t,i,h,a,S));return;case"img":case"link":case"area":case"base":case"br":case"col":case"embed":case"hr":case"keygen":case"meta":case"param":case"source":case"track":case"wbr":case"menuitem":for(var A in u)h=u[A],u.hasOwnProperty(A)&&h!=null&&!a.hasOwnProperty(A)&&Z(l,t,A,null,a,h);for(m in a)if(h=a[m],S=u[m],a.hasOwnProperty(m)&&h!==S&&(h!=null||S!=null))switch(m){case"children":case"dangerouslySetInnerHTML":if(h!=null)throw Error(b(137,t));break;default:Z(l,t,m,h,a,S)}return;default:if(Qc(t)){for(var Q in u)h=u[Q],u.hasOwnProperty(Q)&&h!==void 0&&!a.hasOwnProperty(Q)&&Ac(l,t,Q,void 0,a,h);for(g in a)h=a[g],S=u[g],!a.hasOwnProperty(g)||h===S||h===void 0&&S===void 0||Ac(l,t,g,h,a,S);return}}for(var v in u)h=u[v],u.hasOwnProperty(v)&&h!=null&&!a.hasOwnProperty(v)&&Z(l,t,v,null,a,h);for(s in a)h=a[s],S=u[s],!a.hasOwnProperty(s)||h===S||h==null&&S==null||Z(l,t,s,h,a,S)}function d1(l){switch(l){case"css":case"script":case"font":case"img":case"image":case"input":case"link":return!0;default:return!1}}function Jh(){if(typeof performance.getEntriesByType=="function"){for(var l=0,t=0,u=performance.getEntriesByType("resource"),a=0;a<u.length;a++){var n=u[a],e=n.transferSize,f=n.initiatorType,c=n.duration;if(e&&c&&d1(f)){for(f=0,c=n.responseEnd,a+=1;a<u.length;a++){var i=u[a],m=i.startTime;if(m>c)break;var g=i.transferSize,s=i.initiatorType;g&&d1(s)&&(i=i.responseEnd,f+=g*(i<c?1:(c-m)/(i-m)))}if(--a,t+=8*(e+f)/(n.duration/1e3),l++,10<l)break}}if(0<l)return t/l/1e6}return navigator.connection&&(l=navigator.connection.downlink,typeof l=="number")?l:5}var Oc=null,_c=null;function ze(l){return l.nodeType===9?l:l.ownerDocument}function h1(l){switch(l){case"http://www.w3.org/2000/svg":return 1;case"http://www.w3.org/1998/Math/MathML":return 2;default:return 0}}function um(l,t){if(l===0)switch(t){case"svg":return 1;case"math":return 2;default:return 0}return l===1&&t==="foreignObject"?0:l}function Mc(l,t){return l==="textarea"||l==="noscript"||typeof t.children=="string"||typeof t.children=="number"||typeof t.children=="bigint"||typeof t.dangerouslySetInnerHTML=="object"&&t.dangerouslySetInnerHTML!==null&&t.dangerouslySetInnerHTML.__html!=null}var Cf=null;function rh(){var l=window.event;return l&&l.type==="popstate"?l===Cf?!1:(Cf=l,!0):(Cf=null,!1)}var am=typeof setTimeout=="function"?setTimeout:void 0,wh=typeof clearTimeout=="function"?clearTimeout:void 0,S1=typeof Promise=="function"?Promise:void 0,Wh=typeof queueMicrotask=="function"?queueMicrotask:typeof S1<"u"?function(l){return S1.resolve(null).then(l).catch($h)}:am;function $h(l){setTimeout(function(){throw l})}function Ft(l){return l==="head"}function g1(l,t){var u=t,a=0;do{var n=u.nextSibling;if(l.removeChild(u),n&&n.nodeType===8)if(u=n.data,u==="/$"||u==="/&"){if(a===0){l.removeChild(n),ta(t);return}a--}else if(u==="$"||u==="$?"||u==="$~"||u==="$!"||u==="&")a++;else if(u==="html")Xa(l.ownerDocument.documentElement);else if(u==="head"){u=l.ownerDocument.head,Xa(u);for(var e=u.firstChild;e;){var f=e.nextSibling,c=e.nodeName;e[un]||c==="SCRIPT"||c==="STYLE"||c==="LINK"&&e.rel.toLowerCase()==="stylesheet"||u.removeChild(e),e=f}}else u==="body"&&Xa(l.ownerDocument.body);u=n}while(u);ta(t)}function o1(l,t){var u=l;l=0;do{var a=u.nextSibling;if(u.nodeType===1?t?(u._stashedDisplay=u.style.display,u.style.display="none"):(u.style.display=u._stashedDisplay||"",u.getAttribute("style")===""&&u.removeAttribute("style")):u.nodeType===3&&(t?(u._stashedText=u.nodeValue,u.nodeValue=""):u.nodeValue=u._stashedText||""),a&&a.nodeType===8)if(u=a.data,u==="/$"){if(l===0)break;l--}else u!=="$"&&u!=="$?"&&u!=="$~"&&u!=="$!"||l++;u=a}while(u)}function Dc(l){var t=l.firstChild;for(t&&t.nodeType===10&&(t=t.nextSibling);t;){var u=t;switch(t=t.nextSibling,u.nodeName){case"HTML":case"HEAD":case"BODY":Dc(u),Xc(u);continue;case"SCRIPT":case"STYLE":continue;case"LINK":if(u.rel.toLowerCase()==="stylesheet")continue}l.removeChild(u)}}function Fh(l,t,u,a){for(;l.nodeType===1;){var n=u;if(l.nodeName.toLowerCase()!==t.toLowerCase()){if(!a&&(l.nodeName!=="INPUT"||l.type!=="hidden"))break}else if(a){if(!l[un])switch(t){case"meta":if(!l.hasAttribute("itemprop"))break;return l;case"link":if(e=l.getAttribute("rel"),e==="stylesheet"&&l.hasAttribute("data-precedence"))break;if(e!==n.rel||l.getAttribute("href")!==(n.href==null||n.href===""?null:n.href)||l.getAttribute("crossorigin")!==(n.crossOrigin==null?null:n.crossOrigin)||l.getAttribute("title")!==(n.title==null?null:n.title))break;return l;case"style":if(l.hasAttribute("data-precedence"))break;return l;case"script":if(e=l.getAttribute("src"),(e!==(n.src==null?null:n.src)||l.getAttribute("type")!==(n.type==null?null:n.type)||l.getAttribute("crossorigin")!==(n.crossOrigin==null?null:n.crossOrigin))&&e&&l.hasAttribute("async")&&!l.hasAttribute("itemprop"))break;return l;default:return l}}else if(t==="input"&&l.type==="hidden"){var e=n.name==null?null:""+n.name;if(n.type==="hidden"&&l.getAttribute("name")===e)return l}else return l;if(l=Ll(l.nextSibling),l===null)break}return null}function kh(l,t,u){if(t==="")return null;for(;l.nodeType!==3;)if((l.nodeType!==1||l.nodeName!=="INPUT"||l.type!=="hidden")&&!u||(l=Ll(l.nextSibling),l===null))return null;return l}function nm(l,t){for(;l.nodeType!==8;)if((l.nodeType!==1||l.nodeName!=="INPUT"||l.type!=="hidden")&&!t||(l=Ll(l.nextSibling),l===null))return null;return l}function Uc(l){return l.data==="$?"||l.data==="$~"}function Hc(l){return l.data==="$!"||l.data==="$?"&&l.ownerDocument.readyState!=="loading"}function Ih(l,t){var u=l.ownerDocument;if(l.data==="$~")l._reactRetry=t;else if(l.data!=="$?"||u.readyState!=="loading")t();else{var a=function(){t(),u.removeEventListener("DOMContentLoaded",a)};u.addEventListener("DOMContentLoaded",a),l._reactRetry=a}}function Ll(l){for(;l!=null;l=l.nextSibling){var t=l.nodeType;if(t===1||t===3)break;if(t===8){if(t=l.data,t==="$"||t==="$!"||t==="$?"||t==="$~"||t==="&"||t==="F!"||t==="F")break;if(t==="/$"||t==="/&")return null}}return l}var Nc=null;function s1(l){l=l.nextSibling;for(var t=0;l;){if(l.nodeType===8){var u=l.data;if(u==="/$"||u==="/&"){if(t===0)return Ll(l.nextSibling);t--}else u!=="$"&&u!=="$!"&&u!=="$?"&&u!=="$~"&&u!=="&"||t++}l=l.nextSibling}return null}function b1(l){l=l.previousSibling;for(var t=0;l;){if(l.nodeType===8){var u=l.data;if(u==="$"||u==="$!"||u==="$?"||u==="$~"||u==="&"){if(t===0)return l;t--}else u!=="/$"&&u!=="/&"||t++}l=l.previousSibling}return null}function em(l,t,u){switch(t=ze(u),l){case"html":if(l=t.documentElement,!l)throw Error(b(452));return l;case"head":if(l=t.head,!l)throw Error(b(453));return l;case"body":if(l=t.body,!l)throw Error(b(454));return l;default:throw Error(b(451))}}function Xa(l){for(var t=l.attributes;t.length;)l.removeAttributeNode(t[0]);Xc(l)}var Kl=new Map,z1=new Set;function Ee(l){return typeof l.getRootNode=="function"?l.getRootNode():l.nodeType===9?l:l.ownerDocument}var Et=C.d;C.d={f:Ph,r:l2,D:t2,C:u2,L:a2,m:n2,X:f2,S:e2,M:c2};function Ph(){var l=Et.f(),t=Xe();return l||t}function l2(l){var t=aa(l);t!==null&&t.tag===5&&t.type==="form"?Iy(t):Et.r(l)}var ca=typeof document>"u"?null:document;function fm(l,t,u){var a=ca;if(a&&typeof t=="string"&&t){var n=Zl(t);n='link[rel="'+l+'"][href="'+n+'"]',typeof u=="string"&&(n+='[crossorigin="'+u+'"]'),z1.has(n)||(z1.add(n),l={rel:l,crossOrigin:u,href:t},a.querySelector(n)===null&&(t=a.createElement("link"),dl(t,"link",l),fl(t),a.head.appendChild(t)))}}function t2(l){Et.D(l),fm("dns-prefetch",l,null)}function u2(l,t){Et.C(l,t),fm("preconnect",l,t)}function a2(l,t,u){Et.L(l,t,u);var a=ca;if(a&&l&&t){var n='link[rel="preload"][as="'+Zl(t)+'"]';t==="image"&&u&&u.imageSrcSet?(n+='[imagesrcset="'+Zl(u.imageSrcSet)+'"]',typeof u.imageSizes=="string"&&(n+='[imagesizes="'+Zl(u.imageSizes)+'"]')):n+='[href="'+Zl(l)+'"]';var e=n;switch(t){case"style":e=la(l);break;case"script":e=ia(l)}Kl.has(e)||(l=r({rel:"preload",href:t==="image"&&u&&u.imageSrcSet?void 0:l,as:t},u),Kl.set(e,l),a.querySelector(n)!==null||t==="style"&&a.querySelector(yn(e))||t==="script"&&a.querySelector(vn(e))||(t=a.createElement("link"),dl(t,"link",l),fl(t),a.head.appendChild(t)))}}function n2(l,t){Et.m(l,t);var u=ca;if(u&&l){var a=t&&typeof t.as=="string"?t.as:"script",n='link[rel="modulepreload"][as="'+Zl(a)+'"][href="'+Zl(l)+'"]',e=n;switch(a){case"audioworklet":case"paintworklet":case"serviceworker":case"sharedworker":case"worker":case"script":e=ia(l)}if(!Kl.has(e)&&(l=r({rel:"modulepreload",href:l},t),Kl.set(e,l),u.querySelector(n)===null)){switch(a){case"audioworklet":case"paintworklet":case"serviceworker":case"sharedworker":case"worker":case"script":if(u.querySelector(vn(e)))return}a=u.createElement("link"),dl(a,"link",l),fl(a),u.head.appendChild(a)}}}function e2(l,t,u){Et.S(l,t,u);var a=ca;if(a&&l){var n=Qu(a).hoistableStyles,e=la(l);t=t||"default";var f=n.get(e);if(!f){var c={loading:0,preload:null};if(f=a.querySelector(yn(e)))c.loading=5;else{l=r({rel:"stylesheet",href:l,"data-precedence":t},u),(u=Kl.get(e))&&Ai(l,u);var i=f=a.createElement("link");fl(i),dl(i,"link",l),i._p=new Promise(function(m,g){i.onload=m,i.onerror=g}),i.addEventListener("load",function(){c.loading|=1}),i.addEventListener("error",function(){c.loading|=2}),c.loading|=4,rn(f,t,a)}f={type:"stylesheet",instance:f,count:1,state:c},n.set(e,f)}}}function f2(l,t){Et.X(l,t);var u=ca;if(u&&l){var a=Qu(u).hoistableScripts,n=ia(l),e=a.get(n);e||(e=u.querySelector(vn(n)),e||(l=r({src:l,async:!0},t),(t=Kl.get(n))&&Oi(l,t),e=u.createElement("script"),fl(e),dl(e,"link",l),u.head.appendChild(e)),e={type:"script",instance:e,count:1,state:null},a.set(n,e))}}function c2(l,t){Et.M(l,t);var u=ca;if(u&&l){var a=Qu(u).hoistableScripts,n=ia(l),e=a.get(n);e||(e=u.querySelector(vn(n)),e||(l=r({src:l,async:!0,type:"module"},t),(t=Kl.get(n))&&Oi(l,t),e=u.createElement("script"),fl(e),dl(e,"link",l),u.head.appendChild(e)),e={type:"script",instance:e,count:1,state:null},a.set(n,e))}}function E1(l,t,u,a){var n=(n=Gt.current)?Ee(n):null;if(!n)throw Error(b(446));switch(l){case"meta":case"title":return null;case"style":return typeof u.precedence=="string"&&typeof u.href=="string"?(t=la(u.href),u=Qu(n).hoistableStyles,a=u.get(t),a||(a={type:"style",instance:null,count:0,state:null},u.set(t,a)),a):{type:"void",instance:null,count:0,state:null};case"link":if(u.rel==="stylesheet"&&typeof u.href=="string"&&typeof u.precedence=="string"){l=la(u.href);var e=Qu(n).hoistableStyles,f=e.get(l);if(f||(n=n.ownerDocument||n,f={type:"stylesheet",instance:null,count:0,state:{loading:0,preload:null}},e.set(l,f),(e=n.querySelector(yn(l)))&&!e._p&&(f.instance=e,f.state.loading=5),Kl.has(l)||(u={rel:"preload",as:"style",href:u.href,crossOrigin:u.crossOrigin,integrity:u.integrity,media:u.media,hrefLang:u.hrefLang,referrerPolicy:u.referrerPolicy},Kl.set(l,u),e||i2(n,l,u,f.state))),t&&a===null)throw Error(b(528,""));return f}if(t&&a!==null)throw Error(b(529,""));return null;case"script":return t=u.async,u=u.src,typeof u=="string"&&t&&typeof t!="function"&&typeof t!="symbol"?(t=ia(u),u=Qu(n).hoistableScripts,a=u.get(t),a||(a={type:"script",instance:null,count:0,state:null},u.set(t,a)),a):{type:"void",instance:null,count:0,state:null};default:throw Error(b(444,l))}}function la(l){return'href="'+Zl(l)+'"'}function yn(l){return'link[rel="stylesheet"]['+l+"]"}function cm(l){return r({},l,{"data-precedence":l.precedence,precedence:null})}function i2(l,t,u,a){l.querySelector('link[rel="preload"][as="style"]['+t+"]")?a.loading=1:(t=l.createElement("link"),a.preload=t,t.addEventListener("load",function(){return a.loading|=1}),t.addEventListener("error",function(){return a.loading|=2}),dl(t,"link",u),fl(t),l.head.appendChild(t))}function ia(l){return'[src="'+Zl(l)+'"]'}function vn(l){return"script[async]"+l}function T1(l,t,u){if(t.count++,t.instance===null)switch(t.type){case"style":var a=l.querySelector('style[data-href~="'+Zl(u.href)+'"]');if(a)return t.instance=a,fl(a),a;var n=r({},u,{"data-href":u.href,"data-precedence":u.precedence,href:null,precedence:null});return a=(l.ownerDocument||l).createElement("style"),fl(a),dl(a,"style",n),rn(a,u.precedence,l),t.instance=a;case"stylesheet":n=la(u.href);var e=l.querySelector(yn(n));if(e)return t.state.loading|=4,t.instance=e,fl(e),e;a=cm(u),(n=Kl.get(n))&&Ai(a,n),e=(l.ownerDocument||l).createElement("link"),fl(e);var f=e;return f._p=new Promise(function(c,i){f.onload=c,f.onerror=i}),dl(e,"link",a),t.state.loading|=4,rn(e,u.precedence,l),t.instance=e;case"script":return e=ia(u.src),(n=l.querySelector(vn(e)))?(t.instance=n,fl(n),n):(a=u,(n=Kl.get(e))&&(a=r({},u),Oi(a,n)),l=l.ownerDocument||l,n=l.createElement("script"),fl(n),dl(n,"link",a),l.head.appendChild(n),t.instance=n);case"void":return null;default:throw Error(b(443,t.type))}else t.type==="stylesheet"&&(t.state.loading&4)===0&&(a=t.instance,t.state.loading|=4,rn(a,u.precedence,l));return t.instance}function rn(l,t,u){for(var a=u.querySelectorAll('link[rel="stylesheet"][data-precedence],style[data-precedence]'),n=a.length?a[a.length-1]:null,e=n,f=0;f<a.length;f++){var c=a[f];if(c.dataset.precedence===t)e=c;else if(e!==n)break}e?e.parentNode.insertBefore(l,e.nextSibling):(t=u.nodeType===9?u.head:u,t.insertBefore(l,t.firstChild))}function Ai(l,t){l.crossOrigin==null&&(l.crossOrigin=t.crossOrigin),l.referrerPolicy==null&&(l.referrerPolicy=t.referrerPolicy),l.title==null&&(l.title=t.title)}function Oi(l,t){l.crossOrigin==null&&(l.crossOrigin=t.crossOrigin),l.referrerPolicy==null&&(l.referrerPolicy=t.referrerPolicy),l.integrity==null&&(l.integrity=t.integrity)}var wn=null;function A1(l,t,u){if(wn===null){var a=new Map,n=wn=new Map;n.set(u,a)}else n=wn,a=n.get(u),a||(a=new Map,n.set(u,a));if(a.has(l))return a;for(a.set(l,null),u=u.getElementsByTagName(l),n=0;n<u.length;n++){var e=u[n];if(!(e[un]||e[yl]||l==="link"&&e.getAttribute("rel")==="stylesheet")&&e.namespaceURI!=="http://www.w3.org/2000/svg"){var f=e.getAttribute(t)||"";f=l+f;var c=a.get(f);c?c.push(e):a.set(f,[e])}}return a}function O1(l,t,u){l=l.ownerDocument||l,l.head.insertBefore(u,t==="title"?l.querySelector("head > title"):null)}function y2(l,t,u){if(u===1||t.itemProp!=null)return!1;switch(l){case"meta":case"title":return!0;case"style":if(typeof t.precedence!="string"||typeof t.href!="string"||t.href==="")break;return!0;case"link":if(typeof t.rel!="string"||typeof t.href!="string"||t.href===""||t.onLoad||t.onError)break;return t.rel==="stylesheet"?(l=t.disabled,typeof t.precedence=="string"&&l==null):!0;case"script":if(t.async&&typeof t.async!="function"&&typeof t.async!="symbol"&&!t.onLoad&&!t.onError&&t.src&&typeof t.src=="string")return!0}return!1}function im(l){return!(l.type==="stylesheet"&&(l.state.loading&3)===0)}function v2(l,t,u,a){if(u.type==="stylesheet"&&(typeof a.media!="string"||matchMedia(a.media).matches!==!1)&&(u.state.loading&4)===0){if(u.instance===null){var n=la(a.href),e=t.querySelector(yn(n));if(e){t=e._p,t!==null&&typeof t=="object"&&typeof t.then=="function"&&(l.count++,l=Te.bind(l),t.then(l,l)),u.state.loading|=4,u.instance=e,fl(e);return}e=t.ownerDocument||t,a=cm(a),(n=Kl.get(n))&&Ai(a,n),e=e.createElement("link"),fl(e);var f=e;f._p=new Promise(function(c,i){f.onload=c,f.onerror=i}),dl(e,"link",a),u.instance=e}l.stylesheets===null&&(l.stylesheets=new Map),l.stylesheets.set(u,t),(t=u.state.preload)&&(u.state.loading&3)===0&&(l.count++,u=Te.bind(l),t.addEventListener("load",u),t.addEventListener("error",u))}}var Gf=0;function m2(l,t){return l.stylesheets&&l.count===0&&Wn(l,l.stylesheets),0<l.count||0<l.imgCount?function(u){var a=setTimeout(function(){if(l.stylesheets&&Wn(l,l.stylesheets),l.unsuspend){var e=l.unsuspend;l.unsuspend=null,e()}},6e4+t);0<l.imgBytes&&Gf===0&&(Gf=62500*Jh());var n=setTimeout(function(){if(l.waitingForImages=!1,l.count===0&&(l.stylesheets&&Wn(l,l.stylesheets),l.unsuspend)){var e=l.unsuspend;l.unsuspend=null,e()}},(l.imgBytes>Gf?50:800)+t);return l.unsuspend=u,function(){l.unsuspend=null,clearTimeout(a),clearTimeout(n)}}:null}function Te(){if(this.count--,this.count===0&&(this.imgCount===0||!this.waitingForImages)){if(this.stylesheets)Wn(this,this.stylesheets);else if(this.unsuspend){var l=this.unsuspend;this.unsuspend=null,l()}}}var Ae=null;function Wn(l,t){l.stylesheets=null,l.unsuspend!==null&&(l.count++,Ae=new Map,t.forEach(d2,l),Ae=null,Te.call(l))}function d2(l,t){if(!(t.state.loading&4)){var u=Ae.get(l);if(u)var a=u.get(null);else{u=new Map,Ae.set(l,u);for(var n=l.querySelectorAll("link[data-precedence],style[data-precedence]"),e=0;e<n.length;e++){var f=n[e];(f.nodeName==="LINK"||f.getAttribute("media")!=="not all")&&(u.set(f.dataset.precedence,f),a=f)}a&&u.set(null,a)}n=t.instance,f=n.getAttribute("data-precedence"),e=u.get(f)||a,e===a&&u.set(null,n),u.set(f,n),this.count++,a=Te.bind(this),n.addEventListener("load",a),n.addEventListener("error",a),e?e.parentNode.insertBefore(n,e.nextSibling):(l=l.nodeType===9?l.head:l,l.insertBefore(n,l.firstChild)),t.state.loading|=4}}var $a={$$typeof:yt,Provider:null,Consumer:null,_currentValue:uu,_currentValue2:uu,_threadCount:0};function h2(l,t,u,a,n,e,f,c,i){this.tag=1,this.containerInfo=l,this.pingCache=this.current=this.pendingChildren=null,this.timeoutHandle=-1,this.callbackNode=this.next=this.pendingContext=this.context=this.cancelPendingCommit=null,this.callbackPriority=0,this.expirationTimes=cf(-1),this.entangledLanes=this.shellSuspendCounter=this.errorRecoveryDisabledLanes=this.expiredLanes=this.warmLanes=this.pingedLanes=this.suspendedLanes=this.pendingLanes=0,this.entanglements=cf(0),this.hiddenUpdates=cf(null),this.identifierPrefix=a,this.onUncaughtError=n,this.onCaughtError=e,this.onRecoverableError=f,this.pooledCache=null,this.pooledCacheLanes=0,this.formState=i,this.incompleteTransitions=new Map}function ym(l,t,u,a,n,e,f,c,i,m,g,s){return l=new h2(l,t,u,f,i,m,g,s,c),t=1,e===!0&&(t|=24),e=Dl(3,null,null,t),l.current=e,e.stateNode=l,t=$c(),t.refCount++,l.pooledCache=t,t.refCount++,e.memoizedState={element:a,isDehydrated:u,cache:t},Ic(e),l}function vm(l){return l?(l=Yu,l):Yu}function mm(l,t,u,a,n,e){n=vm(n),a.context===null?a.context=n:a.pendingContext=n,a=Qt(t),a.payload={element:u},e=e===void 0?null:e,e!==null&&(a.callback=e),u=Zt(l,a,t),u!==null&&(Tl(u,l,t),Na(u,l,t))}function _1(l,t){if(l=l.memoizedState,l!==null&&l.dehydrated!==null){var u=l.retryLane;l.retryLane=u!==0&&u<t?u:t}}function _i(l,t){_1(l,t),(l=l.alternate)&&_1(l,t)}function dm(l){if(l.tag===13||l.tag===31){var t=gu(l,67108864);t!==null&&Tl(t,l,67108864),_i(l,67108864)}}function M1(l){if(l.tag===13||l.tag===31){var t=ql();t=Cc(t);var u=gu(l,t);u!==null&&Tl(u,l,t),_i(l,t)}}var Oe=!0;function S2(l,t,u,a){var n=O.T;O.T=null;var e=C.p;try{C.p=2,Mi(l,t,u,a)}finally{C.p=e,O.T=n}}function g2(l,t,u,a){var n=O.T;O.T=null;var e=C.p;try{C.p=8,Mi(l,t,u,a)}finally{C.p=e,O.T=n}}function Mi(l,t,u,a){if(Oe){var n=pc(a);if(n===null)Yf(l,t,a,_e,u),D1(l,a);else if(s2(n,l,t,u,a))a.stopPropagation();else if(D1(l,a),t&4&&-1<o2.indexOf(l)){for(;n!==null;){var e=aa(n);if(e!==null)switch(e.tag){case 3:if(e=e.stateNode,e.current.memoizedState.isDehydrated){var f=Pt(e.pendingLanes);if(f!==0){var c=e;for(c.pendingLanes|=2,c.entangledLanes|=2;f;){var i=1<<31-pl(f);c.entanglements[1]|=i,f&=~i}lt(e),(Y&6)===0&&(he=Hl()+500,cn(0,!1))}}break;case 31:case 13:c=gu(e,2),c!==null&&Tl(c,e,2),Xe(),_i(e,2)}if(e=pc(a),e===null&&Yf(l,t,a,_e,u),e===n)break;n=e}n!==null&&a.stopPropagation()}else Yf(l,t,a,null,u)}}function pc(l){return l=Zc(l),Di(l)}var _e=null;function Di(l){if(_e=null,l=Hu(l),l!==null){var t=Ia(l);if(t===null)l=null;else{var u=t.tag;if(u===13){if(l=R1(t),l!==null)return l;l=null}else if(u===31){if(l=B1(t),l!==null)return l;l=null}else if(u===3){if(t.stateNode.current.memoizedState.isDehydrated)return t.tag===3?t.stateNode.containerInfo:null;l=null}else t!==l&&(l=null)}}return _e=l,null}function hm(l){switch(l){case"beforetoggle":case"cancel":case"click":case"close":case"contextmenu":case"copy":case"cut":case"auxclick":case"dblclick":case"dragend":case"dragstart":case"drop":case"focusin":case"focusout":case"input":case"invalid":case"keydown":case"keypress":case"keyup":case"mousedown":case"mouseup":case"paste":case"pause":case"play":case"pointercancel":case"pointerdown":case"pointerup":case"ratechange":case"reset":case"resize":case"seeked":case"submit":case"toggle":case"touchcancel":case"touchend":case"touchstart":case"volumechange":case"change":case"selectionchange":case"textInput":case"compositionstart":case"compositionend":case"compositionupdate":case"beforeblur":case"afterblur":case"beforeinput":case"blur":case"fullscreenchange":case"focus":case"hashchange":case"popstate":case"select":case"selectstart":return 2;case"drag":case"dragenter":case"dragexit":case"dragleave":case"dragover":case"mousemove":case"mouseout":case"mouseover":case"pointermove":case"pointerout":case"pointerover":case"scroll":case"touchmove":case"wheel":case"mouseenter":case"mouseleave":case"pointerenter":case"pointerleave":return 8;case"message":switch(ad()){case X1:return 2;case Q1:return 8;case Pn:case nd:return 32;case Z1:return 268435456;default:return 32}default:return 32}}var qc=!1,xt=null,Lt=null,Kt=null,Fa=new Map,ka=new Map,pt=[],o2="mousedown mouseup touchcancel touchend touchstart auxclick dblclick pointercancel pointerdown pointerup dragend dragstart drop compositionend compositionstart keydown keypress keyup input textInput copy cut paste click change contextmenu reset".split(" ");function D1(l,t){switch(l){case"focusin":case"focusout":xt=null;break;case"dragenter":case"dragleave":Lt=null;break;case"mouseover":case"mouseout":Kt=null;break;case"pointerover":case"pointerout":Fa.delete(t.pointerId);break;case"gotpointercapture":case"lostpointercapture":ka.delete(t.pointerId)}}function ba(l,t,u,a,n,e){return l===null||l.nativeEvent!==e?(l={blockedOn:t,domEventName:u,eventSystemFlags:a,nativeEvent:e,targetContainers:[n]},t!==null&&(t=aa(t),t!==null&&dm(t)),l):(l.eventSystemFlags|=a,t=l.targetContainers,n!==null&&t.indexOf(n)===-1&&t.push(n),l)}function s2(l,t,u,a,n){switch(t){case"focusin":return xt=ba(xt,l,t,u,a,n),!0;case"dragenter":return Lt=ba(Lt,l,t,u,a,n),!0;case"mouseover":return Kt=ba(Kt,l,t,u,a,n),!0;case"pointerover":var e=n.pointerId;return Fa.set(e,ba(Fa.get(e)||null,l,t,u,a,n)),!0;case"gotpointercapture":return e=n.pointerId,ka.set(e,ba(ka.get(e)||null,l,t,u,a,n)),!0}return!1}function Sm(l){var t=Hu(l.target);if(t!==null){var u=Ia(t);if(u!==null){if(t=u.tag,t===13){if(t=R1(u),t!==null){l.blockedOn=t,y0(l.priority,function(){M1(u)});return}}else if(t===31){if(t=B1(u),t!==null){l.blockedOn=t,y0(l.priority,function(){M1(u)});return}}else if(t===3&&u.stateNode.current.memoizedState.isDehydrated){l.blockedOn=u.tag===3?u.stateNode.containerInfo:null;return}}}l.blockedOn=null}function $n(l){if(l.blockedOn!==null)return!1;for(var t=l.targetContainers;0<t.length;){var u=pc(l.nativeEvent);if(u===null){u=l.nativeEvent;var a=new u.constructor(u.type,u);$f=a,u.target.dispatchEvent(a),$f=null}else return t=aa(u),t!==null&&dm(t),l.blockedOn=u,!1;t.shift()}return!0}function U1(l,t,u){$n(l)&&u.delete(t)}function b2(){qc=!1,xt!==null&&$n(xt)&&(xt=null),Lt!==null&&$n(Lt)&&(Lt=null),Kt!==null&&$n(Kt)&&(Kt=null),Fa.forEach(U1),ka.forEach(U1)}function Bn(l,t){l.blockedOn===t&&(l.blockedOn=null,qc||(qc=!0,nl.unstable_scheduleCallback(nl.unstable_NormalPriority,b2)))}var Yn=null;function H1(l){Yn!==l&&(Yn=l,nl.unstable_scheduleCallback(nl.unstable_NormalPriority,function(){Yn===l&&(Yn=null);for(var t=0;t<l.length;t+=3){var u=l[t],a=l[t+1],n=l[t+2];if(typeof a!="function"){if(Di(a||u)===null)continue;break}var e=aa(u);e!==null&&(l.splice(t,3),t-=3,mc(e,{pending:!0,data:n,method:u.method,action:a},a,n))}}))}function ta(l){function t(i){return Bn(i,l)}xt!==null&&Bn(xt,l),Lt!==null&&Bn(Lt,l),Kt!==null&&Bn(Kt,l),Fa.forEach(t),ka.forEach(t);for(var u=0;u<pt.length;u++){var a=pt[u];a.blockedOn===l&&(a.blockedOn=null)}for(;0<pt.length&&(u=pt[0],u.blockedOn===null);)Sm(u),u.blockedOn===null&&pt.shift();if(u=(l.ownerDocument||l).$$reactFormReplay,u!=null)for(a=0;a<u.length;a+=3){var n=u[a],e=u[a+1],f=n[Al]||null;if(typeof e=="function")f||H1(u);else if(f){var c=null;if(e&&e.hasAttribute("formAction")){if(n=e,f=e[Al]||null)c=f.formAction;else if(Di(n)!==null)continue}else c=f.action;typeof c=="function"?u[a+1]=c:(u.splice(a,3),a-=3),H1(u)}}}function gm(){function l(e){e.canIntercept&&e.info==="react-transition"&&e.intercept({handler:function(){return new Promise(function(f){return n=f})},focusReset:"manual",scroll:"manual"})}function t(){n!==null&&(n(),n=null),a||setTimeout(u,20)}function u(){if(!a&&!navigation.transition){var e=navigation.currentEntry;e&&e.url!=null&&navigation.navigate(e.url,{state:e.getState(),info:"react-transition",history:"replace"})}}if(typeof navigation=="object"){var a=!1,n=null;return navigation.addEventListener("navigate",l),navigation.addEventListener("navigatesuccess",t),navigation.addEventListener("navigateerror",t),setTimeout(u,100),function(){a=!0,navigation.removeEventListener("navigate",l),navigation.removeEventListener("navigatesuccess",t),navigation.removeEventListener("navigateerror",t),n!==null&&(n(),n=null)}}}function Ui(l){this._internalRoot=l}je.prototype.render=Ui.prototype.render=function(l){var t=this._internalRoot;if(t===null)throw Error(b(409));var u=t.current,a=ql();mm(u,a,l,t,null,null)};je.prototype.unmount=Ui.prototype.unmount=function(){var l=this._internalRoot;if(l!==null){this._internalRoot=null;var t=l.containerInfo;mm(l.current,2,null,l,null,null),Xe(),t[ua]=null}};function je(l){this._internalRoot=l}je.prototype.unstable_scheduleHydration=function(l){if(l){var t=K1();l={blockedOn:null,target:l,priority:t};for(var u=0;u<pt.length&&t!==0&&t<pt[u].priority;u++);pt.splice(u,0,l),u===0&&Sm(l)}};var N1=p1.version;if(N1!=="19.2.8")throw Error(b(527,N1,"19.2.8"));C.findDOMNode=function(l){var t=l._reactInternals;if(t===void 0)throw typeof l.render=="function"?Error(b(188)):(l=Object.keys(l).join(","),Error(b(268,l)));return l=Fm(t),l=l!==null?Y1(l):null,l=l===null?null:l.stateNode,l};var z2={bundleType:0,version:"19.2.8",rendererPackageName:"react-dom",currentDispatcherRef:O,reconcilerVersion:"19.2.8"};if(typeof __REACT_DEVTOOLS_GLOBAL_HOOK__<"u"&&(za=__REACT_DEVTOOLS_GLOBAL_HOOK__,!za.isDisabled&&za.supportsFiber))try{Pa=za.inject(z2),Nl=za}catch{}var za;Ve.createRoot=function(l,t){if(!q1(l))throw Error(b(299));var u=!1,a="",n=fv,e=cv,f=iv;return t!=null&&(t.unstable_strictMode===!0&&(u=!0),t.identifierPrefix!==void 0&&(a=t.identifierPrefix),t.onUncaughtError!==void 0&&(n=t.onUncaughtError),t.onCaughtError!==void 0&&(e=t.onCaughtError),t.onRecoverableError!==void 0&&(f=t.onRecoverableError)),t=ym(l,1,!1,null,null,u,a,null,n,e,f,gm),l[ua]=t.current,Ti(l),new Ui(t)};Ve.hydrateRoot=function(l,t,u){if(!q1(l))throw Error(b(299));var a=!1,n="",e=fv,f=cv,c=iv,i=null;return u!=null&&(u.unstable_strictMode===!0&&(a=!0),u.identifierPrefix!==void 0&&(n=u.identifierPrefix),u.onUncaughtError!==void 0&&(e=u.onUncaughtError),u.onCaughtError!==void 0&&(f=u.onCaughtError),u.onRecoverableError!==void 0&&(c=u.onRecoverableError),u.formState!==void 0&&(i=u.formState)),t=ym(l,1,!0,t,u??null,a,n,i,e,f,c,gm),t.context=vm(null),u=t.current,a=ql(),a=Cc(a),n=Qt(a),n.callback=null,Zt(u,n,a),u=a,t.current.lanes=u,tn(t,u),lt(t),l[ua]=t.current,Ti(l),new je(t)};Ve.version="19.2.8"});var zm=At((H2,bm)=>{"use strict";function sm(){if(!(typeof __REACT_DEVTOOLS_GLOBAL_HOOK__>"u"||typeof __REACT_DEVTOOLS_GLOBAL_HOOK__.checkDCE!="function"))try{__REACT_DEVTOOLS_GLOBAL_HOOK__.checkDCE(sm)}catch(l){console.error(l)}}sm(),bm.exports=om()});var Em=Ni(dn()),Tm=Ni(zm()),{act:N2,cache:p2,Children:q2,cloneElement:R2,Component:B2,createContext:Y2,createElement:C2,createRef:G2,forwardRef:X2,Fragment:Q2,isValidElement:Z2,lazy:j2,memo:V2,Profiler:x2,PureComponent:L2,startTransition:K2,StrictMode:J2,Suspense:r2,use:w2,useActionState:W2,useCallback:$2,useContext:F2,useDebugValue:k2,useDeferredValue:I2,useEffect:P2,useId:lS,useImperativeHandle:tS,useInsertionEffect:uS,useLayoutEffect:aS,useMemo:nS,useOptimistic:eS,useReducer:fS,useRef:cS,useState:iS,useSyncExternalStore:yS,useTransition:vS,version:mS}=Em;var dS=Em;var export_createRoot=Tm.createRoot;var export_hydrateRoot=Tm.hydrateRoot;export{q2 as Children,B2 as Component,Q2 as Fragment,x2 as Profiler,L2 as PureComponent,J2 as StrictMode,r2 as Suspense,N2 as act,p2 as cache,R2 as cloneElement,Y2 as createContext,C2 as createElement,G2 as createRef,export_createRoot as createRoot,dS as default,X2 as forwardRef,export_hydrateRoot as hydrateRoot,Z2 as isValidElement,j2 as lazy,V2 as memo,K2 as startTransition,w2 as use,W2 as useActionState,$2 as useCallback,F2 as useContext,k2 as useDebugValue,I2 as useDeferredValue,P2 as useEffect,lS as useId,tS as useImperativeHandle,uS as useInsertionEffect,aS as useLayoutEffect,nS as useMemo,eS as useOptimistic,fS as useReducer,cS as useRef,iS as useState,yS as useSyncExternalStore,vS as useTransition,mS as version};
/*! Bundled license information:

react/cjs/react.production.js:
  (**
   * @license React
   * react.production.js
   *
   * Copyright (c) Meta Platforms, Inc. and affiliates.
   *
   * This source code is licensed under the MIT license found in the
   * LICENSE file in the root directory of this source tree.
   *)

scheduler/cjs/scheduler.production.js:
  (**
   * @license React
   * scheduler.production.js
   *
   * Copyright (c) Meta Platforms, Inc. and affiliates.
   *
   * This source code is licensed under the MIT license found in the
   * LICENSE file in the root directory of this source tree.
   *)

react-dom/cjs/react-dom.production.js:
  (**
   * @license React
   * react-dom.production.js
   *
   * Copyright (c) Meta Platforms, Inc. and affiliates.
   *
   * This source code is licensed under the MIT license found in the
   * LICENSE file in the root directory of this source tree.
   *)

react-dom/cjs/react-dom-client.production.js:
  (**
   * @license React
   * react-dom-client.production.js
   *
   * Copyright (c) Meta Platforms, Inc. and affiliates.
   *
   * This source code is licensed under the MIT license found in the
   * LICENSE file in the root directory of this source tree.
   *)
*/
